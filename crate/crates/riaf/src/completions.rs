//! Completion semantics: every way of resolving a framework's uncertainty
//! yields a plain AF. A completion keeps all certain arguments, picks a
//! subset of the uncertain ones, keeps the certain attacks restricted to
//! the present arguments, picks a subset of the applicable uncertain
//! attacks, and orients every applicable conflict pair one way, the other,
//! or both.

use std::collections::{BTreeMap, BTreeSet};

use crate::core::{restrict, ArgumentId, ArgumentationFramework, AttackPair, RichIaf};

/// Direction chosen for one unordered conflict pair. `Forward` is the
/// attack from the lexicographically smaller endpoint to the larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Forward,
    Backward,
    Both,
}

impl Orientation {
    const ORDER: [Orientation; 3] = [Orientation::Forward, Orientation::Backward, Orientation::Both];
}

/// One way of resolving all uncertainty of a framework.
///
/// Choices are applicable-only: attacks and conflict pairs with an absent
/// endpoint carry no entry, so distinct choices realize distinct
/// completions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionChoice {
    pub included_uncertain_args: BTreeSet<ArgumentId>,
    pub included_uncertain_attacks: BTreeSet<AttackPair>,
    /// Keyed by the unordered pair with the smaller endpoint first.
    pub conflict_orientation: BTreeMap<AttackPair, Orientation>,
}

impl CompletionChoice {
    /// The plain framework this choice selects.
    pub fn realize(&self, riaf: &RichIaf) -> ArgumentationFramework {
        let mut args = riaf.certain_args().clone();
        args.extend(self.included_uncertain_args.iter().cloned());
        let mut attacks = restrict(riaf.certain_attacks(), &args);
        attacks.extend(self.included_uncertain_attacks.iter().cloned());
        for ((u, v), orientation) in &self.conflict_orientation {
            match orientation {
                Orientation::Forward => {
                    attacks.insert((u.clone(), v.clone()));
                }
                Orientation::Backward => {
                    attacks.insert((v.clone(), u.clone()));
                }
                Orientation::Both => {
                    attacks.insert((u.clone(), v.clone()));
                    attacks.insert((v.clone(), u.clone()));
                }
            }
        }
        ArgumentationFramework::new(args, attacks)
            .expect("realized completion endpoints are present by construction")
    }
}

/// True when `af` is a completion of `riaf`: certain arguments kept,
/// argument set within bounds, attack set between the forced certain part
/// and the allowed union, and every applicable conflict pair oriented at
/// least one way.
pub fn is_completion(riaf: &RichIaf, af: &ArgumentationFramework) -> bool {
    let args = af.arguments();
    if !riaf.certain_args().is_subset(args) {
        return false;
    }
    if !args
        .iter()
        .all(|a| riaf.certain_args().contains(a) || riaf.uncertain_args().contains(a))
    {
        return false;
    }

    let forced = restrict(riaf.certain_attacks(), args);
    if !forced.is_subset(af.attacks()) {
        return false;
    }
    let mut allowed = forced;
    allowed.extend(restrict(riaf.uncertain_attacks(), args));
    allowed.extend(restrict(riaf.uncertain_conflicts(), args));
    if !af.attacks().is_subset(&allowed) {
        return false;
    }

    restrict(riaf.uncertain_conflicts(), args)
        .iter()
        .all(|(a, b)| af.contains_attack(a, b) || af.contains_attack(b, a))
}

// Advances an ascending index list through the subsets of 0..k in
// lexicographic order: [], [0], [0,1], ..., [0,k-1], [1], ...
// Returns false once the sequence is exhausted.
fn next_lex_subset(current: &mut Vec<usize>, k: usize) -> bool {
    let next = current.last().map_or(0, |&m| m + 1);
    if next < k {
        current.push(next);
        return true;
    }
    current.pop();
    match current.last_mut() {
        Some(last) => {
            *last += 1;
            true
        }
        None => false,
    }
}

/// Streaming enumeration of completion choices in a fixed order: subsets
/// of the uncertain arguments lexicographically, then subsets of the
/// applicable uncertain attacks, then orientations per applicable conflict
/// pair (`Forward`, `Backward`, `Both`, with the first pair varying
/// slowest).
pub struct CompletionChoices<'a> {
    riaf: &'a RichIaf,
    uncertain_args: Vec<ArgumentId>,
    arg_subset: Vec<usize>,
    applicable_attacks: Vec<AttackPair>,
    applicable_pairs: Vec<AttackPair>,
    attack_subset: Vec<usize>,
    orientations: Vec<Orientation>,
    exhausted: bool,
}

impl<'a> CompletionChoices<'a> {
    fn new(riaf: &'a RichIaf) -> Self {
        let uncertain_args: Vec<ArgumentId> = riaf.uncertain_args().iter().cloned().collect();
        let mut it = CompletionChoices {
            riaf,
            uncertain_args,
            arg_subset: Vec::new(),
            applicable_attacks: Vec::new(),
            applicable_pairs: Vec::new(),
            attack_subset: Vec::new(),
            orientations: Vec::new(),
            exhausted: false,
        };
        it.enter_arg_subset();
        it
    }

    fn present_args(&self) -> BTreeSet<ArgumentId> {
        let mut args = self.riaf.certain_args().clone();
        args.extend(self.arg_subset.iter().map(|&i| self.uncertain_args[i].clone()));
        args
    }

    // Recomputes the applicable attack and conflict lists for the current
    // argument subset and resets the inner positions.
    fn enter_arg_subset(&mut self) {
        let present = self.present_args();
        self.applicable_attacks = restrict(self.riaf.uncertain_attacks(), &present)
            .into_iter()
            .collect();
        self.applicable_pairs = restrict(self.riaf.uncertain_conflicts(), &present)
            .into_iter()
            .filter(|(a, b)| a < b)
            .collect();
        self.attack_subset.clear();
        self.orientations = vec![Orientation::Forward; self.applicable_pairs.len()];
    }

    fn current_choice(&self) -> CompletionChoice {
        CompletionChoice {
            included_uncertain_args: self
                .arg_subset
                .iter()
                .map(|&i| self.uncertain_args[i].clone())
                .collect(),
            included_uncertain_attacks: self
                .attack_subset
                .iter()
                .map(|&i| self.applicable_attacks[i].clone())
                .collect(),
            conflict_orientation: self
                .applicable_pairs
                .iter()
                .cloned()
                .zip(self.orientations.iter().copied())
                .collect(),
        }
    }

    fn advance(&mut self) {
        // Innermost: orientation vector in mixed radix, last pair fastest.
        for i in (0..self.orientations.len()).rev() {
            let pos = Orientation::ORDER
                .iter()
                .position(|&o| o == self.orientations[i])
                .expect("orientation is one of the three");
            if pos + 1 < Orientation::ORDER.len() {
                self.orientations[i] = Orientation::ORDER[pos + 1];
                self.orientations[i + 1..].fill(Orientation::Forward);
                return;
            }
        }
        self.orientations.fill(Orientation::Forward);

        if next_lex_subset(&mut self.attack_subset, self.applicable_attacks.len()) {
            return;
        }
        self.attack_subset.clear();

        if next_lex_subset(&mut self.arg_subset, self.uncertain_args.len()) {
            self.enter_arg_subset();
            return;
        }
        self.exhausted = true;
    }
}

impl Iterator for CompletionChoices<'_> {
    type Item = CompletionChoice;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        let choice = self.current_choice();
        self.advance();
        Some(choice)
    }
}

/// Iterates the completions of `riaf` in the fixed enumeration order
/// without materializing the list; existential queries can stop early.
pub fn completions_iter(riaf: &RichIaf) -> impl Iterator<Item = ArgumentationFramework> + '_ {
    CompletionChoices::new(riaf).map(move |choice| choice.realize(riaf))
}

/// Iterates choices paired with the frameworks they realize.
pub fn completion_choices(riaf: &RichIaf) -> CompletionChoices<'_> {
    CompletionChoices::new(riaf)
}

/// All completions of `riaf` in enumeration order. Distinct surviving
/// choices realize distinct frameworks, so the list is duplicate-free.
pub fn enumerate_completions(riaf: &RichIaf) -> Vec<ArgumentationFramework> {
    completions_iter(riaf).collect()
}

/// Upper bound 2^(|A?|+|R?|) * 3^(conflict pairs) on the completion count;
/// not always reached, since choices on attacks incident to an absent
/// argument do not apply. Saturates on overflow.
pub fn completion_count_bound(riaf: &RichIaf) -> u128 {
    let two_exp = (riaf.uncertain_args().len() + riaf.uncertain_attacks().len()) as u32;
    let three_exp = (riaf.uncertain_conflicts().len() / 2) as u32;
    let base = 2u128.checked_pow(two_exp).unwrap_or(u128::MAX);
    let tri = 3u128.checked_pow(three_exp).unwrap_or(u128::MAX);
    base.saturating_mul(tri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::lift_af;
    use crate::test_util::{
        af, attack_set, empty_riaf, five_arg_af, rich_conflict_riaf, two_way_conflict,
        uncertain_iaf,
    };

    #[test]
    fn two_way_conflict_has_exactly_three_completions() {
        let riaf = two_way_conflict();
        let completions = enumerate_completions(&riaf);
        let expected = vec![
            af(["a", "b"], [("a", "b")]),
            af(["a", "b"], [("b", "a")]),
            af(["a", "b"], [("a", "b"), ("b", "a")]),
        ];
        assert_eq!(completions.len(), 3);
        for c in &expected {
            assert!(completions.contains(c));
        }
    }

    #[test]
    fn uncertain_iaf_has_exactly_six_completions() {
        let riaf = uncertain_iaf();
        let completions = enumerate_completions(&riaf);
        let base = [("b", "a"), ("c", "a"), ("d", "b"), ("d", "c")];
        let five = |extra: &[(&str, &str)]| {
            af(
                ["a", "b", "c", "d", "e"],
                base.iter().copied().chain(extra.iter().copied()),
            )
        };
        let six = |extra: &[(&str, &str)]| {
            af(
                ["a", "b", "c", "d", "e", "f"],
                base.iter().copied().chain(extra.iter().copied()),
            )
        };
        let expected = vec![
            five(&[]),
            six(&[]),
            six(&[("f", "d")]),
            five(&[("e", "a")]),
            six(&[("e", "a")]),
            six(&[("e", "a"), ("f", "d")]),
        ];
        assert_eq!(completions.len(), 6);
        for c in &expected {
            assert!(completions.contains(c), "missing completion {c:?}");
        }
    }

    #[test]
    fn rich_conflict_has_eighteen_completions() {
        let riaf = rich_conflict_riaf();
        let completions = enumerate_completions(&riaf);
        assert_eq!(completions.len(), 18);

        // The three completions that keep f, (e,a) and (f,d) and differ
        // only in the conflict orientation.
        let rest = [("c", "a"), ("d", "b"), ("d", "c"), ("e", "a"), ("f", "d")];
        for oriented in [
            vec![("b", "a")],
            vec![("a", "b")],
            vec![("a", "b"), ("b", "a")],
        ] {
            let c = af(
                ["a", "b", "c", "d", "e", "f"],
                rest.iter().copied().chain(oriented.iter().copied()),
            );
            assert!(completions.contains(&c), "missing oriented completion {c:?}");
        }
    }

    #[test]
    fn is_completion_examples() {
        let riaf = two_way_conflict();
        assert!(is_completion(&riaf, &af(["a", "b"], [("a", "b")])));
        // No attack between a and b violates the orientation requirement.
        assert!(!is_completion(&riaf, &af(["a", "b"], [])));

        let f = five_arg_af();
        assert!(is_completion(&lift_af(&f), &f));
    }

    #[test]
    fn every_enumerated_completion_satisfies_is_completion_once() {
        for riaf in [uncertain_iaf(), rich_conflict_riaf(), two_way_conflict()] {
            let completions = enumerate_completions(&riaf);
            let unique: BTreeSet<_> = completions.iter().cloned().collect();
            assert_eq!(unique.len(), completions.len(), "duplicates in enumeration");
            for c in &completions {
                assert!(is_completion(&riaf, c));
            }
        }
    }

    // Exhaustive converse: every framework assembled from allowed parts is
    // enumerated iff is_completion accepts it.
    #[test]
    fn enumeration_matches_exhaustive_candidate_search() {
        for riaf in [uncertain_iaf(), rich_conflict_riaf(), two_way_conflict()] {
            let completions = enumerate_completions(&riaf);
            let uncertain: Vec<ArgumentId> = riaf.uncertain_args().iter().cloned().collect();
            let union: Vec<AttackPair> = riaf.attack_union().into_iter().collect();
            for arg_mask in 0u32..(1 << uncertain.len()) {
                let mut args = riaf.certain_args().clone();
                for (i, a) in uncertain.iter().enumerate() {
                    if arg_mask & (1 << i) != 0 {
                        args.insert(a.clone());
                    }
                }
                for attack_mask in 0u32..(1 << union.len()) {
                    let attacks: BTreeSet<AttackPair> = union
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| attack_mask & (1 << i) != 0)
                        .map(|(_, p)| p.clone())
                        .collect();
                    if attacks
                        .iter()
                        .any(|(s, d)| !args.contains(s) || !args.contains(d))
                    {
                        continue;
                    }
                    let candidate = ArgumentationFramework::new(args.clone(), attacks).unwrap();
                    let expected = is_completion(&riaf, &candidate);
                    let occurrences = completions.iter().filter(|c| **c == candidate).count();
                    assert_eq!(occurrences, usize::from(expected));
                }
            }
        }
    }

    // Direct reading of the incomplete-framework completion definition,
    // independent of the choice iterator.
    fn iaf_completions_direct(riaf: &RichIaf) -> BTreeSet<ArgumentationFramework> {
        assert!(riaf.uncertain_conflicts().is_empty());
        let uncertain: Vec<ArgumentId> = riaf.uncertain_args().iter().cloned().collect();
        let mut out = BTreeSet::new();
        for arg_mask in 0u32..(1 << uncertain.len()) {
            let mut args = riaf.certain_args().clone();
            for (i, a) in uncertain.iter().enumerate() {
                if arg_mask & (1 << i) != 0 {
                    args.insert(a.clone());
                }
            }
            let forced = restrict(riaf.certain_attacks(), &args);
            let optional: Vec<AttackPair> =
                restrict(riaf.uncertain_attacks(), &args).into_iter().collect();
            for attack_mask in 0u32..(1 << optional.len()) {
                let mut attacks = forced.clone();
                for (i, p) in optional.iter().enumerate() {
                    if attack_mask & (1 << i) != 0 {
                        attacks.insert(p.clone());
                    }
                }
                out.insert(ArgumentationFramework::new(args.clone(), attacks).unwrap());
            }
        }
        out
    }

    #[test]
    fn lifted_iaf_preserves_completion_set() {
        let riaf = uncertain_iaf();
        let direct = iaf_completions_direct(&riaf);
        let enumerated: BTreeSet<_> = enumerate_completions(&riaf).into_iter().collect();
        assert_eq!(direct, enumerated);

        // Two-argument example: one certain, one uncertain, one uncertain
        // attack; three completions.
        let small = crate::core::lift_iaf(
            crate::test_util::id_set(["a"]),
            crate::test_util::id_set(["b"]),
            BTreeSet::new(),
            attack_set([("b", "a")]),
        )
        .unwrap();
        assert_eq!(enumerate_completions(&small).len(), 3);
        assert_eq!(iaf_completions_direct(&small).len(), 3);
    }

    #[test]
    fn count_bound_examples() {
        assert_eq!(completion_count_bound(&uncertain_iaf()), 8);
        assert_eq!(enumerate_completions(&uncertain_iaf()).len(), 6);
        assert_eq!(completion_count_bound(&two_way_conflict()), 3);
        assert_eq!(completion_count_bound(&lift_af(&five_arg_af())), 1);
        assert_eq!(completion_count_bound(&rich_conflict_riaf()), 24);
    }

    #[test]
    fn empty_riaf_has_one_empty_completion() {
        let completions = enumerate_completions(&empty_riaf());
        assert_eq!(completions.len(), 1);
        assert!(completions[0].arguments().is_empty());
    }

    #[test]
    fn streaming_iterator_matches_materialized_list() {
        for riaf in [uncertain_iaf(), rich_conflict_riaf(), two_way_conflict(), empty_riaf()] {
            let streamed: Vec<_> = completions_iter(&riaf).collect();
            assert_eq!(streamed, enumerate_completions(&riaf));
        }
    }

    #[test]
    fn choices_only_cover_applicable_elements() {
        let riaf = rich_conflict_riaf();
        for choice in completion_choices(&riaf) {
            let mut present = riaf.certain_args().clone();
            present.extend(choice.included_uncertain_args.iter().cloned());
            for (s, d) in &choice.included_uncertain_attacks {
                assert!(present.contains(s) && present.contains(d));
            }
            for (u, v) in choice.conflict_orientation.keys() {
                assert!(u < v);
                assert!(present.contains(u) && present.contains(v));
            }
            // every applicable pair carries exactly one orientation
            let applicable = restrict(riaf.uncertain_conflicts(), &present);
            assert_eq!(choice.conflict_orientation.len() * 2, applicable.len());
        }
    }
}
