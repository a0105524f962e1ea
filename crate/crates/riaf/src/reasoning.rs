//! Reference oracle for the eight decision problems, by explicit
//! quantification over the completions.
//!
//! Verification problems check a query set against each completion, either
//! intersected with the completion's arguments (`IncPv`/`IncNv`) or as-is
//! (`IncPvStar`/`IncNvStar`). Acceptance problems check credulous or
//! skeptical acceptance of a single certain argument. Possible variants
//! quantify existentially, necessary variants universally; both
//! short-circuit on the first completion that settles the answer, so
//! witnesses are deterministic.

use std::fmt;

use thiserror::Error;

use crate::completions::completions_iter;
use crate::core::{ArgumentId, ArgumentSet, ArgumentationFramework, RichIaf};
use crate::dense::DenseAf;
use crate::semantics::{enumerate_extensions, Semantics, SemanticsError};

/// The eight decision problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProblemKind {
    IncPv,
    IncNv,
    IncPvStar,
    IncNvStar,
    Pca,
    Nca,
    Psa,
    Nsa,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 8] = [
        ProblemKind::IncPv,
        ProblemKind::IncNv,
        ProblemKind::IncPvStar,
        ProblemKind::IncNvStar,
        ProblemKind::Pca,
        ProblemKind::Nca,
        ProblemKind::Psa,
        ProblemKind::Nsa,
    ];

    /// Acceptance problems take an argument; verification problems a set.
    pub fn is_acceptance(self) -> bool {
        matches!(
            self,
            ProblemKind::Pca | ProblemKind::Nca | ProblemKind::Psa | ProblemKind::Nsa
        )
    }

    /// Possible variants quantify existentially over completions.
    pub fn is_existential(self) -> bool {
        matches!(
            self,
            ProblemKind::IncPv | ProblemKind::IncPvStar | ProblemKind::Pca | ProblemKind::Psa
        )
    }

    pub fn token(self) -> &'static str {
        match self {
            ProblemKind::IncPv => "IncPV",
            ProblemKind::IncNv => "IncNV",
            ProblemKind::IncPvStar => "IncPVstar",
            ProblemKind::IncNvStar => "IncNVstar",
            ProblemKind::Pca => "PCA",
            ProblemKind::Nca => "NCA",
            ProblemKind::Psa => "PSA",
            ProblemKind::Nsa => "NSA",
        }
    }

    pub fn parse_token(s: &str) -> Option<ProblemKind> {
        let lowered = s.to_ascii_lowercase();
        ProblemKind::ALL
            .into_iter()
            .find(|p| p.token().to_ascii_lowercase() == lowered)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Answer plus certificate. A witness completion certifies a possible-YES
/// or a necessary-NO; for acceptance problems an extension may certify the
/// per-completion check. Answers without a certificate (a possible-NO or a
/// necessary-YES, or the trivially false skeptical problems under ad)
/// carry no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryVerdict {
    pub answer: bool,
    pub witness: Option<ArgumentationFramework>,
    pub extension_witness: Option<ArgumentSet>,
}

impl QueryVerdict {
    pub fn bare(answer: bool) -> Self {
        QueryVerdict { answer, witness: None, extension_witness: None }
    }
}

/// How acceptance queries about uncertain arguments are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QueryArgPolicy {
    /// Only certain arguments may be queried; others are an error.
    #[default]
    CertainOnly,
    /// Uncertain arguments may be queried; a completion omitting the
    /// argument counts as not accepting it.
    AllowUncertain,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReasoningError {
    #[error("argument `{0}` is not declared in the framework")]
    UndeclaredArgument(ArgumentId),
    #[error("argument `{0}` is uncertain; acceptance problems are posed for certain arguments")]
    UncertainQueryArgument(ArgumentId),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error("wrong query shape for {0}: verification problems take a set, acceptance problems an argument")]
    WrongQueryShape(ProblemKind),
}

fn check_query_set(riaf: &RichIaf, s: &ArgumentSet) -> Result<(), ReasoningError> {
    for a in s.iter() {
        if !riaf.is_declared(a) {
            return Err(ReasoningError::UndeclaredArgument(a.clone()));
        }
    }
    Ok(())
}

fn check_query_arg(
    riaf: &RichIaf,
    a: &ArgumentId,
    policy: QueryArgPolicy,
) -> Result<(), ReasoningError> {
    if !riaf.is_declared(a) {
        return Err(ReasoningError::UndeclaredArgument(a.clone()));
    }
    if policy == QueryArgPolicy::CertainOnly && !riaf.is_certain(a) {
        return Err(ReasoningError::UncertainQueryArgument(a.clone()));
    }
    Ok(())
}

/// Runs one of the four verification problems against the oracle.
pub fn verification_query(
    riaf: &RichIaf,
    kind: ProblemKind,
    s: &ArgumentSet,
    sem: Semantics,
) -> Result<QueryVerdict, ReasoningError> {
    if kind.is_acceptance() {
        return Err(ReasoningError::WrongQueryShape(kind));
    }
    check_query_set(riaf, s)?;
    let starred = matches!(kind, ProblemKind::IncPvStar | ProblemKind::IncNvStar);
    let existential = kind.is_existential();

    for completion in completions_iter(riaf) {
        let checked = if starred {
            if !s.is_subset_of(completion.arguments()) {
                // The set mentions an absent argument, so it cannot be an
                // extension of this completion.
                if !existential {
                    return Ok(QueryVerdict {
                        answer: false,
                        witness: Some(completion),
                        extension_witness: None,
                    });
                }
                continue;
            }
            s.clone()
        } else {
            s.intersect(completion.arguments())
        };
        let dense = DenseAf::new(&completion)?;
        let mask = dense.mask_of(&checked).expect("checked set is within the completion");
        let holds = dense.is_extension_mask(mask, sem);
        if existential && holds {
            return Ok(QueryVerdict {
                answer: true,
                witness: Some(completion),
                extension_witness: Some(checked),
            });
        }
        if !existential && !holds {
            return Ok(QueryVerdict {
                answer: false,
                witness: Some(completion),
                extension_witness: None,
            });
        }
    }
    Ok(QueryVerdict::bare(!existential))
}

/// Is there a completion in which S ∩ A′ is a `sem`-extension?
pub fn inc_pv(riaf: &RichIaf, s: &ArgumentSet, sem: Semantics) -> Result<QueryVerdict, ReasoningError> {
    verification_query(riaf, ProblemKind::IncPv, s, sem)
}

/// Is S ∩ A′ a `sem`-extension of every completion?
pub fn inc_nv(riaf: &RichIaf, s: &ArgumentSet, sem: Semantics) -> Result<QueryVerdict, ReasoningError> {
    verification_query(riaf, ProblemKind::IncNv, s, sem)
}

/// Is there a completion in which S itself is a `sem`-extension?
pub fn inc_pv_star(
    riaf: &RichIaf,
    s: &ArgumentSet,
    sem: Semantics,
) -> Result<QueryVerdict, ReasoningError> {
    verification_query(riaf, ProblemKind::IncPvStar, s, sem)
}

/// Is S itself a `sem`-extension of every completion?
pub fn inc_nv_star(
    riaf: &RichIaf,
    s: &ArgumentSet,
    sem: Semantics,
) -> Result<QueryVerdict, ReasoningError> {
    verification_query(riaf, ProblemKind::IncNvStar, s, sem)
}

// Per-completion acceptance check. Absent arguments are not accepted;
// skeptical acceptance over an empty extension family holds vacuously.
fn accepted_in(
    completion: &ArgumentationFramework,
    a: &ArgumentId,
    sem: Semantics,
    skeptical: bool,
) -> Result<bool, SemanticsError> {
    if !completion.contains_argument(a) {
        return Ok(false);
    }
    let dense = DenseAf::new(completion)?;
    let index = dense.index_of(a).expect("argument is present");
    Ok(if skeptical {
        dense.skeptical(index, sem)
    } else {
        dense.credulous(index, sem)
    })
}

// First extension containing (or avoiding) the argument, in the
// deterministic extension order.
fn extension_certificate(
    completion: &ArgumentationFramework,
    a: &ArgumentId,
    sem: Semantics,
    containing: bool,
) -> Result<Option<ArgumentSet>, SemanticsError> {
    let exts = enumerate_extensions(completion, sem)?;
    Ok(exts.into_iter().find(|e| e.contains(a) == containing))
}

/// Runs one of the four acceptance problems against the oracle.
pub fn acceptance_query(
    riaf: &RichIaf,
    kind: ProblemKind,
    a: &ArgumentId,
    sem: Semantics,
    policy: QueryArgPolicy,
) -> Result<QueryVerdict, ReasoningError> {
    if !kind.is_acceptance() {
        return Err(ReasoningError::WrongQueryShape(kind));
    }
    if sem == Semantics::Cf {
        return Err(ReasoningError::Semantics(SemanticsError::AcceptanceForConflictFree));
    }
    check_query_arg(riaf, a, policy)?;

    let skeptical = matches!(kind, ProblemKind::Psa | ProblemKind::Nsa);
    // The empty set is admissible in every framework, so no argument is
    // ever skeptically accepted under ad; answer without enumerating.
    if skeptical && sem == Semantics::Ad {
        return Ok(QueryVerdict::bare(false));
    }
    let existential = kind.is_existential();

    for completion in completions_iter(riaf) {
        let accepted = accepted_in(&completion, a, sem, skeptical)?;
        if existential && accepted {
            let extension_witness = match kind {
                ProblemKind::Pca => extension_certificate(&completion, a, sem, true)?,
                // All extensions contain the argument; record the first,
                // unless the family is empty and acceptance is vacuous.
                ProblemKind::Psa => enumerate_extensions(&completion, sem)?.into_iter().next(),
                _ => unreachable!(),
            };
            return Ok(QueryVerdict {
                answer: true,
                witness: Some(completion),
                extension_witness,
            });
        }
        if !existential && !accepted {
            let extension_witness = match kind {
                // Credulous failure has no single refuting extension.
                ProblemKind::Nca => None,
                // Skeptical failure is certified by an extension that
                // avoids the argument (absent argument: any extension).
                ProblemKind::Nsa => extension_certificate(&completion, a, sem, false)?,
                _ => unreachable!(),
            };
            return Ok(QueryVerdict {
                answer: false,
                witness: Some(completion),
                extension_witness,
            });
        }
    }
    Ok(QueryVerdict::bare(!existential))
}

/// Is the argument credulously accepted in some completion?
pub fn pca(riaf: &RichIaf, a: &ArgumentId, sem: Semantics) -> Result<QueryVerdict, ReasoningError> {
    acceptance_query(riaf, ProblemKind::Pca, a, sem, QueryArgPolicy::CertainOnly)
}

/// Is the argument credulously accepted in every completion?
pub fn nca(riaf: &RichIaf, a: &ArgumentId, sem: Semantics) -> Result<QueryVerdict, ReasoningError> {
    acceptance_query(riaf, ProblemKind::Nca, a, sem, QueryArgPolicy::CertainOnly)
}

/// Is the argument skeptically accepted in some completion?
pub fn psa(riaf: &RichIaf, a: &ArgumentId, sem: Semantics) -> Result<QueryVerdict, ReasoningError> {
    acceptance_query(riaf, ProblemKind::Psa, a, sem, QueryArgPolicy::CertainOnly)
}

/// Is the argument skeptically accepted in every completion?
pub fn nsa(riaf: &RichIaf, a: &ArgumentId, sem: Semantics) -> Result<QueryVerdict, ReasoningError> {
    acceptance_query(riaf, ProblemKind::Nsa, a, sem, QueryArgPolicy::CertainOnly)
}
