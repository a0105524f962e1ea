//! Framework data model: arguments, attacks and the three uncertainty
//! layers (uncertain arguments, uncertain attacks, uncertain conflicts).
//!
//! All types are immutable once validated and safe to share between
//! threads.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// An ordered attack between two arguments.
pub type AttackPair = (ArgumentId, ArgumentId);

const MAX_NAME_LEN: usize = 255;

/// Identifier of an argument. Identity is by name; names are case-sensitive
/// ASCII tokens made of letters, digits and underscores.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self, CoreError> {
        let name = name.into();
        let ok = !name.is_empty()
            && name.len() <= MAX_NAME_LEN
            && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_');
        if ok {
            Ok(ArgumentId(name))
        } else {
            Err(CoreError::InvalidArgumentName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for ArgumentId {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ArgumentId::new(s)
    }
}

/// A set of argument identifiers: a candidate extension or a query set.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentSet(BTreeSet<ArgumentId>);

impl ArgumentSet {
    pub fn new() -> Self {
        ArgumentSet(BTreeSet::new())
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.iter()
    }

    pub fn insert(&mut self, a: ArgumentId) -> bool {
        self.0.insert(a)
    }

    pub fn is_subset_of(&self, args: &BTreeSet<ArgumentId>) -> bool {
        self.0.is_subset(args)
    }

    /// Members that also belong to `args` (the set S ∩ A′).
    pub fn intersect(&self, args: &BTreeSet<ArgumentId>) -> ArgumentSet {
        ArgumentSet(self.0.intersection(args).cloned().collect())
    }

    pub fn as_inner(&self) -> &BTreeSet<ArgumentId> {
        &self.0
    }
}

impl FromIterator<ArgumentId> for ArgumentSet {
    fn from_iter<T: IntoIterator<Item = ArgumentId>>(iter: T) -> Self {
        ArgumentSet(iter.into_iter().collect())
    }
}

impl IntoIterator for ArgumentSet {
    type Item = ArgumentId;
    type IntoIter = std::collections::btree_set::IntoIter<ArgumentId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a ArgumentSet {
    type Item = &'a ArgumentId;
    type IntoIter = std::collections::btree_set::Iter<'a, ArgumentId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Comma-separated sorted member names.
impl fmt::Display for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            f.write_str(a.as_str())?;
        }
        Ok(())
    }
}

/// A certain directed attack graph over named arguments; the completion
/// object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentationFramework {
    arguments: BTreeSet<ArgumentId>,
    attacks: BTreeSet<AttackPair>,
}

impl ArgumentationFramework {
    /// Builds an AF, checking that every attack endpoint is declared.
    pub fn new(
        arguments: BTreeSet<ArgumentId>,
        attacks: BTreeSet<AttackPair>,
    ) -> Result<Self, CoreError> {
        for (src, dst) in &attacks {
            for end in [src, dst] {
                if !arguments.contains(end) {
                    return Err(CoreError::UndeclaredEndpoint {
                        attack: (src.clone(), dst.clone()),
                        endpoint: end.clone(),
                        relation: RelationKind::Certain,
                    });
                }
            }
        }
        Ok(ArgumentationFramework { arguments, attacks })
    }

    pub fn arguments(&self) -> &BTreeSet<ArgumentId> {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<AttackPair> {
        &self.attacks
    }

    pub fn contains_argument(&self, a: &ArgumentId) -> bool {
        self.arguments.contains(a)
    }

    pub fn contains_attack(&self, src: &ArgumentId, dst: &ArgumentId) -> bool {
        self.attacks.contains(&(src.clone(), dst.clone()))
    }

    /// Arguments attacking `a`.
    pub fn attackers_of<'a>(&'a self, a: &'a ArgumentId) -> impl Iterator<Item = &'a ArgumentId> {
        self.attacks
            .iter()
            .filter(move |(_, dst)| dst == a)
            .map(|(src, _)| src)
    }
}

/// Which of the three attack relations a pair was declared in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// Certain attacks R.
    Certain,
    /// Uncertain attacks R?.
    Uncertain,
    /// Symmetric uncertain conflicts.
    Conflict,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Certain => "certain attack relation",
            RelationKind::Uncertain => "uncertain attack relation",
            RelationKind::Conflict => "uncertain conflict relation",
        })
    }
}

/// A rich incomplete argumentation framework: certain and uncertain
/// arguments, certain and uncertain directed attacks, plus a symmetric
/// conflict relation whose attack direction is unknown.
///
/// Invariants enforced by [`RichIaf::new`]:
/// - certain and uncertain argument sets are disjoint;
/// - the three attack relations are pairwise disjoint as ordered pairs;
/// - the conflict relation is symmetric and irreflexive;
/// - every attack endpoint is a declared argument.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RichIaf {
    certain_args: BTreeSet<ArgumentId>,
    uncertain_args: BTreeSet<ArgumentId>,
    certain_attacks: BTreeSet<AttackPair>,
    uncertain_attacks: BTreeSet<AttackPair>,
    uncertain_conflicts: BTreeSet<AttackPair>,
}

impl RichIaf {
    /// Validates the five components and returns the framework.
    ///
    /// A one-directional conflict declaration is accepted as a compact
    /// representation and closed symmetrically before the disjointness
    /// checks run.
    pub fn new(
        certain_args: BTreeSet<ArgumentId>,
        uncertain_args: BTreeSet<ArgumentId>,
        certain_attacks: BTreeSet<AttackPair>,
        uncertain_attacks: BTreeSet<AttackPair>,
        uncertain_conflicts: BTreeSet<AttackPair>,
    ) -> Result<Self, CoreError> {
        if let Some(a) = certain_args.intersection(&uncertain_args).next() {
            return Err(CoreError::ArgumentBothCertainAndUncertain(a.clone()));
        }

        let mut conflicts = BTreeSet::new();
        for (a, b) in &uncertain_conflicts {
            if a == b {
                return Err(CoreError::SelfConflict(a.clone()));
            }
            conflicts.insert((a.clone(), b.clone()));
            conflicts.insert((b.clone(), a.clone()));
        }

        let relations = [
            (&certain_attacks, RelationKind::Certain),
            (&uncertain_attacks, RelationKind::Uncertain),
            (&conflicts, RelationKind::Conflict),
        ];
        for i in 0..relations.len() {
            for j in i + 1..relations.len() {
                if let Some(pair) = relations[i].0.intersection(relations[j].0).next() {
                    return Err(CoreError::AttackRelationsOverlap {
                        attack: pair.clone(),
                        first: relations[i].1,
                        second: relations[j].1,
                    });
                }
            }
        }

        for (pairs, kind) in relations {
            for (src, dst) in pairs {
                for end in [src, dst] {
                    if !certain_args.contains(end) && !uncertain_args.contains(end) {
                        return Err(CoreError::UndeclaredEndpoint {
                            attack: (src.clone(), dst.clone()),
                            endpoint: end.clone(),
                            relation: kind,
                        });
                    }
                }
            }
        }

        Ok(RichIaf {
            certain_args,
            uncertain_args,
            certain_attacks,
            uncertain_attacks,
            uncertain_conflicts: conflicts,
        })
    }

    pub fn certain_args(&self) -> &BTreeSet<ArgumentId> {
        &self.certain_args
    }

    pub fn uncertain_args(&self) -> &BTreeSet<ArgumentId> {
        &self.uncertain_args
    }

    pub fn certain_attacks(&self) -> &BTreeSet<AttackPair> {
        &self.certain_attacks
    }

    pub fn uncertain_attacks(&self) -> &BTreeSet<AttackPair> {
        &self.uncertain_attacks
    }

    /// The symmetric conflict relation, stored with both directions present.
    pub fn uncertain_conflicts(&self) -> &BTreeSet<AttackPair> {
        &self.uncertain_conflicts
    }

    /// All declared arguments, certain and uncertain.
    pub fn all_args(&self) -> BTreeSet<ArgumentId> {
        self.certain_args.union(&self.uncertain_args).cloned().collect()
    }

    pub fn is_declared(&self, a: &ArgumentId) -> bool {
        self.certain_args.contains(a) || self.uncertain_args.contains(a)
    }

    pub fn is_certain(&self, a: &ArgumentId) -> bool {
        self.certain_args.contains(a)
    }

    /// Ordered pairs of R ∪ R? ∪ the conflict relation; disjoint by
    /// construction, so this is a partition of the potential attacks.
    pub fn attack_union(&self) -> BTreeSet<AttackPair> {
        let mut union = self.certain_attacks.clone();
        union.extend(self.uncertain_attacks.iter().cloned());
        union.extend(self.uncertain_conflicts.iter().cloned());
        union
    }

    /// One entry per unordered conflict, smaller endpoint first.
    pub fn conflict_pairs(&self) -> Vec<AttackPair> {
        self.uncertain_conflicts
            .iter()
            .filter(|(a, b)| a < b)
            .cloned()
            .collect()
    }

    pub fn has_uncertainty(&self) -> bool {
        !self.uncertain_args.is_empty()
            || !self.uncertain_attacks.is_empty()
            || !self.uncertain_conflicts.is_empty()
    }
}

/// Embeds a plain AF as the uncertainty-free special case; the result has
/// the input as its single completion.
pub fn lift_af(af: &ArgumentationFramework) -> RichIaf {
    RichIaf {
        certain_args: af.arguments().clone(),
        uncertain_args: BTreeSet::new(),
        certain_attacks: af.attacks().clone(),
        uncertain_attacks: BTreeSet::new(),
        uncertain_conflicts: BTreeSet::new(),
    }
}

/// Embeds an incomplete AF (no conflict relation) as a rich framework with
/// an empty conflict relation. Completion sets of input and output coincide.
pub fn lift_iaf(
    certain_args: BTreeSet<ArgumentId>,
    uncertain_args: BTreeSet<ArgumentId>,
    certain_attacks: BTreeSet<AttackPair>,
    uncertain_attacks: BTreeSet<AttackPair>,
) -> Result<RichIaf, CoreError> {
    RichIaf::new(
        certain_args,
        uncertain_args,
        certain_attacks,
        uncertain_attacks,
        BTreeSet::new(),
    )
}

/// Pairs with both endpoints in `args`: the restriction R ∩ (A′ × A′).
pub fn restrict(pairs: &BTreeSet<AttackPair>, args: &BTreeSet<ArgumentId>) -> BTreeSet<AttackPair> {
    pairs
        .iter()
        .filter(|(src, dst)| args.contains(src) && args.contains(dst))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("invalid argument name `{0}`: names are non-empty ASCII tokens of letters, digits and underscores, at most 255 bytes")]
    InvalidArgumentName(String),
    #[error("argument `{0}` is declared both certain and uncertain")]
    ArgumentBothCertainAndUncertain(ArgumentId),
    #[error("attack ({},{}) occurs in both the {first} and the {second}", attack.0, attack.1)]
    AttackRelationsOverlap {
        attack: AttackPair,
        first: RelationKind,
        second: RelationKind,
    },
    #[error("endpoint `{endpoint}` of ({},{}) in the {relation} is not a declared argument", attack.0, attack.1)]
    UndeclaredEndpoint {
        attack: AttackPair,
        endpoint: ArgumentId,
        relation: RelationKind,
    },
    #[error("conflict pair ({0},{0}) relates an argument to itself; use an uncertain self-attack instead")]
    SelfConflict(ArgumentId),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{arg, attack_set, five_arg_af, id_set, uncertain_iaf};

    #[test]
    fn one_directional_conflict_is_closed() {
        let riaf = RichIaf::new(
            id_set(["a", "b"]),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
            attack_set([("a", "b")]),
        )
        .unwrap();
        assert_eq!(riaf.uncertain_conflicts(), &attack_set([("a", "b"), ("b", "a")]));
        assert_eq!(riaf.conflict_pairs(), vec![(arg("a"), arg("b"))]);
    }

    #[test]
    fn overlapping_argument_sets_rejected() {
        let err = RichIaf::new(
            id_set(["a"]),
            id_set(["a"]),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
        )
        .unwrap_err();
        assert_eq!(err, CoreError::ArgumentBothCertainAndUncertain(arg("a")));
    }

    #[test]
    fn overlapping_attack_relations_rejected() {
        let err = RichIaf::new(
            id_set(["a", "b"]),
            BTreeSet::new(),
            attack_set([("a", "b")]),
            BTreeSet::new(),
            attack_set([("a", "b")]),
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::AttackRelationsOverlap { .. }));

        // The closure makes the reversed direction collide too.
        let err = RichIaf::new(
            id_set(["a", "b"]),
            BTreeSet::new(),
            attack_set([("b", "a")]),
            BTreeSet::new(),
            attack_set([("a", "b")]),
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::AttackRelationsOverlap { .. }));

        let err = RichIaf::new(
            id_set(["a", "b"]),
            BTreeSet::new(),
            attack_set([("a", "b")]),
            attack_set([("a", "b")]),
            BTreeSet::new(),
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::AttackRelationsOverlap { .. }));
    }

    #[test]
    fn undeclared_endpoint_rejected() {
        let err = RichIaf::new(
            id_set(["a"]),
            BTreeSet::new(),
            attack_set([("a", "b")]),
            BTreeSet::new(),
            BTreeSet::new(),
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::UndeclaredEndpoint { .. }));
    }

    #[test]
    fn self_conflict_rejected() {
        let err = RichIaf::new(
            id_set(["a"]),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
            attack_set([("a", "a")]),
        )
        .unwrap_err();
        assert_eq!(err, CoreError::SelfConflict(arg("a")));
    }

    #[test]
    fn validation_is_idempotent() {
        let first = uncertain_iaf();
        let second = RichIaf::new(
            first.certain_args().clone(),
            first.uncertain_args().clone(),
            first.certain_attacks().clone(),
            first.uncertain_attacks().clone(),
            first.uncertain_conflicts().clone(),
        )
        .unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn attack_relations_partition_their_union() {
        let riaf = crate::test_util::rich_conflict_riaf();
        let union = riaf.attack_union();
        let total = riaf.certain_attacks().len()
            + riaf.uncertain_attacks().len()
            + riaf.uncertain_conflicts().len();
        assert_eq!(union.len(), total);
    }

    #[test]
    fn lift_af_keeps_structure() {
        let af = five_arg_af();
        let riaf = lift_af(&af);
        assert_eq!(riaf.certain_args().len(), 5);
        assert_eq!(riaf.certain_attacks().len(), 6);
        assert!(!riaf.has_uncertainty());

        let empty = ArgumentationFramework::new(BTreeSet::new(), BTreeSet::new()).unwrap();
        let lifted = lift_af(&empty);
        assert!(lifted.certain_args().is_empty() && !lifted.has_uncertainty());

        let self_attack =
            ArgumentationFramework::new(id_set(["a"]), attack_set([("a", "a")])).unwrap();
        let lifted = lift_af(&self_attack);
        assert_eq!(lifted.certain_attacks(), &attack_set([("a", "a")]));
    }

    #[test]
    fn lift_iaf_keeps_structure() {
        let riaf = uncertain_iaf();
        assert_eq!(riaf.uncertain_args(), &id_set(["f"]));
        assert_eq!(riaf.uncertain_attacks(), &attack_set([("e", "a"), ("f", "d")]));
        assert!(riaf.uncertain_conflicts().is_empty());

        let af = five_arg_af();
        let via_iaf = lift_iaf(
            af.arguments().clone(),
            BTreeSet::new(),
            af.attacks().clone(),
            BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(via_iaf, lift_af(&af));
    }

    #[test]
    fn restrict_examples() {
        let pairs = attack_set([("e", "a"), ("f", "d")]);
        let args = id_set(["a", "b", "c", "d", "e"]);
        assert_eq!(restrict(&pairs, &args), attack_set([("e", "a")]));
        assert_eq!(restrict(&pairs, &BTreeSet::new()), BTreeSet::new());
        assert_eq!(restrict(&BTreeSet::new(), &args), BTreeSet::new());
    }

    #[test]
    fn argument_names_are_validated() {
        assert!(ArgumentId::new("a_1").is_ok());
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a-b").is_err());
        assert!(ArgumentId::new("café").is_err());
        assert!(ArgumentId::new("x".repeat(256)).is_err());
        assert!(ArgumentId::new("x".repeat(255)).is_ok());
    }

    #[test]
    fn attack_endpoints_must_exist_in_af() {
        let err = ArgumentationFramework::new(id_set(["a"]), attack_set([("a", "b")])).unwrap_err();
        assert!(matches!(err, CoreError::UndeclaredEndpoint { .. }));
    }
}
