//! Extension semantics on plain argumentation frameworks: conflict-free,
//! admissible, complete, grounded, preferred and stable, plus the derived
//! acceptance-status sets.
//!
//! [`is_extension`] follows the definitions literally; [`enumerate_extensions`]
//! searches subsets through a bitmask view. The two are cross-checked
//! pointwise in the tests.

use std::fmt;

use thiserror::Error;

use crate::core::{ArgumentId, ArgumentSet, ArgumentationFramework};
use crate::dense::DenseAf;

/// The supported extension semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    /// Conflict-free sets.
    Cf,
    /// Admissible sets.
    Ad,
    /// Complete extensions.
    Co,
    /// The grounded extension.
    Gr,
    /// Preferred extensions.
    Pr,
    /// Stable extensions.
    Stb,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::Cf,
        Semantics::Ad,
        Semantics::Co,
        Semantics::Gr,
        Semantics::Pr,
        Semantics::Stb,
    ];

    /// The five semantics for which acceptance problems are posed.
    pub const ACCEPTANCE: [Semantics; 5] = [
        Semantics::Ad,
        Semantics::Co,
        Semantics::Gr,
        Semantics::Pr,
        Semantics::Stb,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Semantics::Cf => "cf",
            Semantics::Ad => "ad",
            Semantics::Co => "co",
            Semantics::Gr => "gr",
            Semantics::Pr => "pr",
            Semantics::Stb => "stb",
        }
    }

    pub fn parse_token(s: &str) -> Option<Semantics> {
        let lowered = s.to_ascii_lowercase();
        Semantics::ALL.into_iter().find(|sem| sem.token() == lowered)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Acceptance status of a single argument under a semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcceptanceStatus {
    /// In every extension.
    Skeptical,
    /// In some extension.
    Credulous,
    /// In no extension.
    Rejected,
}

/// The three status sets of a framework under one semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcceptanceSets {
    pub skeptical: ArgumentSet,
    pub credulous: ArgumentSet,
    pub rejected: ArgumentSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("argument `{0}` is not declared in the framework")]
    UndeclaredArgument(ArgumentId),
    #[error("acceptance status sets are defined for ad, co, gr, pr and stb, not for cf")]
    AcceptanceForConflictFree,
    #[error("framework has {0} arguments; subset evaluation supports at most 64")]
    TooManyArguments(usize),
}

fn check_declared(af: &ArgumentationFramework, a: &ArgumentId) -> Result<(), SemanticsError> {
    if af.contains_argument(a) {
        Ok(())
    } else {
        Err(SemanticsError::UndeclaredArgument(a.clone()))
    }
}

fn check_set(af: &ArgumentationFramework, s: &ArgumentSet) -> Result<(), SemanticsError> {
    for a in s.iter() {
        check_declared(af, a)?;
    }
    Ok(())
}

/// True when some member of `s` attacks `b`.
pub fn attacks(
    af: &ArgumentationFramework,
    s: &ArgumentSet,
    b: &ArgumentId,
) -> Result<bool, SemanticsError> {
    check_set(af, s)?;
    check_declared(af, b)?;
    Ok(s.iter().any(|a| af.contains_attack(a, b)))
}

/// True when `s` counters every attacker of `c`. Vacuously true for an
/// unattacked argument.
pub fn defends(
    af: &ArgumentationFramework,
    s: &ArgumentSet,
    c: &ArgumentId,
) -> Result<bool, SemanticsError> {
    check_set(af, s)?;
    check_declared(af, c)?;
    Ok(af.attackers_of(c).all(|b| defends_against(af, s, b)))
}

// Per-attacker defense: s attacks the attacker b.
fn defends_against(af: &ArgumentationFramework, s: &ArgumentSet, b: &ArgumentId) -> bool {
    s.iter().any(|a| af.contains_attack(a, b))
}

fn is_conflict_free(af: &ArgumentationFramework, s: &ArgumentSet) -> bool {
    for a in s.iter() {
        for b in s.iter() {
            if af.contains_attack(a, b) {
                return false;
            }
        }
    }
    true
}

fn is_admissible(af: &ArgumentationFramework, s: &ArgumentSet) -> bool {
    is_conflict_free(af, s)
        && s.iter()
            .all(|a| af.attackers_of(a).all(|b| defends_against(af, s, b)))
}

fn is_complete(af: &ArgumentationFramework, s: &ArgumentSet) -> bool {
    is_admissible(af, s)
        && af.arguments().iter().all(|c| {
            let defended = af.attackers_of(c).all(|b| defends_against(af, s, b));
            !defended || s.contains(c)
        })
}

fn subsets_of(items: &[ArgumentId]) -> impl Iterator<Item = ArgumentSet> + '_ {
    (0u128..(1u128 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect()
    })
}

/// Decides whether `s` is a `sem`-extension of `af`, by the definitions.
///
/// The grounded and preferred cases search over subsets and supersets of
/// `s`; this is exponential and intended for desk-scale frameworks.
pub fn is_extension(
    af: &ArgumentationFramework,
    s: &ArgumentSet,
    sem: Semantics,
) -> Result<bool, SemanticsError> {
    check_set(af, s)?;
    Ok(match sem {
        Semantics::Cf => is_conflict_free(af, s),
        Semantics::Ad => is_admissible(af, s),
        Semantics::Co => is_complete(af, s),
        Semantics::Gr => {
            // The unique minimal complete extension: complete with no
            // complete proper subset.
            let members: Vec<ArgumentId> = s.iter().cloned().collect();
            is_complete(af, s)
                && subsets_of(&members).all(|t| t == *s || !is_complete(af, &t))
        }
        Semantics::Pr => {
            // Maximal complete extension: complete with no complete proper
            // superset.
            let outside: Vec<ArgumentId> = af
                .arguments()
                .iter()
                .filter(|a| !s.contains(a))
                .cloned()
                .collect();
            is_complete(af, s)
                && subsets_of(&outside).all(|extra| {
                    extra.is_empty() || {
                        let mut bigger = s.clone();
                        for a in extra {
                            bigger.insert(a);
                        }
                        !is_complete(af, &bigger)
                    }
                })
        }
        Semantics::Stb => {
            is_conflict_free(af, s)
                && af
                    .arguments()
                    .iter()
                    .filter(|b| !s.contains(b))
                    .all(|b| defends_against(af, s, b))
        }
    })
}

fn sort_extensions(mut exts: Vec<ArgumentSet>) -> Vec<ArgumentSet> {
    exts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    exts.dedup();
    exts
}

/// All `sem`-extensions, sorted by cardinality then lexicographically.
pub fn enumerate_extensions(
    af: &ArgumentationFramework,
    sem: Semantics,
) -> Result<Vec<ArgumentSet>, SemanticsError> {
    let dense = DenseAf::new(af)?;
    let exts = dense
        .extensions(sem)
        .into_iter()
        .map(|m| dense.set_of(m))
        .collect();
    Ok(sort_extensions(exts))
}

/// The grounded extension, computed as the least fixpoint of the
/// characteristic function.
pub fn grounded_extension(af: &ArgumentationFramework) -> Result<ArgumentSet, SemanticsError> {
    let dense = DenseAf::new(af)?;
    Ok(dense.set_of(dense.grounded()))
}

/// Skeptically accepted, credulously accepted and rejected arguments.
///
/// With an empty extension family (possible only for stable) the
/// intersection is vacuous: every argument is skeptically accepted and
/// none credulously. Under ad nothing is skeptically accepted because the
/// empty set is admissible.
pub fn acceptance_sets(
    af: &ArgumentationFramework,
    sem: Semantics,
) -> Result<AcceptanceSets, SemanticsError> {
    if sem == Semantics::Cf {
        return Err(SemanticsError::AcceptanceForConflictFree);
    }
    let exts = enumerate_extensions(af, sem)?;
    let credulous: ArgumentSet = af
        .arguments()
        .iter()
        .filter(|a| exts.iter().any(|e| e.contains(a)))
        .cloned()
        .collect();
    let skeptical: ArgumentSet = if sem == Semantics::Ad {
        ArgumentSet::new()
    } else if exts.is_empty() {
        af.arguments().iter().cloned().collect()
    } else {
        af.arguments()
            .iter()
            .filter(|a| exts.iter().all(|e| e.contains(a)))
            .cloned()
            .collect()
    };
    let rejected: ArgumentSet = af
        .arguments()
        .iter()
        .filter(|a| !credulous.contains(a))
        .cloned()
        .collect();
    Ok(AcceptanceSets { skeptical, credulous, rejected })
}
