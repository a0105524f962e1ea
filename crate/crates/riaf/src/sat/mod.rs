//! CNF encodings, an embedded solver, and SAT-backed decision procedures.
//!
//! Engine routing. Verification problems and the grounded semantics have
//! no SAT procedure and always run on the enumeration oracle; the
//! skeptical problems under ad are trivially false. The SAT column names
//! the procedure and the semantics formula it instantiates:
//!
//! | problem | ad            | co            | pr            | stb            | gr     |
//! |---------|---------------|---------------|---------------|----------------|--------|
//! | PCA     | sat (ad)      | sat (ad)      | sat (ad)      | sat (stb)      | oracle |
//! | NCA     | cegar (ad)    | cegar (ad)    | cegar (ad)    | cegar (stb)    | oracle |
//! | PSA     | oracle (no)   | oracle        | oracle        | cegar (stb)    | oracle |
//! | NSA     | oracle (no)   | oracle        | oracle        | sat (stb)      | oracle |
//!
//! Queries about uncertain arguments (the opt-in relaxed mode) run on the
//! oracle only; the SAT procedures require a certain argument.

mod cnf;
mod dimacs;
mod encode;
mod external;
mod procedures;
mod solver;
mod vars;

use thiserror::Error;

use crate::core::{ArgumentId, ArgumentSet, RichIaf};
use crate::reasoning::{
    acceptance_query, verification_query, ProblemKind, QueryArgPolicy, QueryVerdict,
    ReasoningError,
};
use crate::semantics::Semantics;

pub use cnf::CnfFormula;
pub use dimacs::{emit_dimacs, parse_dimacs, write_dimacs, DimacsError};
pub use encode::{encode_ad, encode_cf, encode_defeat_defs, encode_stb, encode_structure};
pub use external::ExternalSolver;
pub use procedures::{
    cegar_nca, cegar_nca_with_stats, cegar_psa_stb, cegar_psa_stb_with_stats, solve_nsa_stb_sat,
    solve_pca_sat, CegarStats,
};
pub use solver::{DpllSolver, Model, SatBackend, SatOutcome};
pub use vars::{SemVar, VarSpace};

#[derive(Debug, Error)]
pub enum SatError {
    #[error("{problem} has no SAT procedure under {semantics}")]
    UnsupportedSemantics { problem: &'static str, semantics: Semantics },
    #[error(transparent)]
    Reasoning(#[from] ReasoningError),
    #[error("external solver failure: {0}")]
    External(String),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

/// Which engine answers a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Brute-force enumeration over completions.
    Enum,
    /// The SAT procedure for the problem, which must exist.
    Sat,
    /// SAT when a procedure exists, enumeration otherwise.
    #[default]
    Auto,
}

impl Engine {
    pub fn parse_token(s: &str) -> Option<Engine> {
        match s.to_ascii_lowercase().as_str() {
            "enum" => Some(Engine::Enum),
            "sat" => Some(Engine::Sat),
            "auto" => Some(Engine::Auto),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("{kind}-{sem} has no SAT procedure; use the enumeration engine")]
    NoSatPath { kind: ProblemKind, sem: Semantics },
    #[error(transparent)]
    Reasoning(#[from] ReasoningError),
    #[error(transparent)]
    Sat(#[from] SatError),
}

/// True when the problem/semantics pair has a SAT procedure.
pub fn has_sat_path(kind: ProblemKind, sem: Semantics) -> bool {
    match kind {
        ProblemKind::Pca | ProblemKind::Nca => matches!(
            sem,
            Semantics::Ad | Semantics::Co | Semantics::Pr | Semantics::Stb
        ),
        ProblemKind::Psa | ProblemKind::Nsa => sem == Semantics::Stb,
        _ => false,
    }
}

fn run_sat_procedure(
    riaf: &RichIaf,
    kind: ProblemKind,
    a: &ArgumentId,
    sem: Semantics,
    backend: &mut dyn SatBackend,
) -> Result<QueryVerdict, SatError> {
    match kind {
        ProblemKind::Pca => solve_pca_sat(riaf, a, sem, backend),
        ProblemKind::Nca => cegar_nca(riaf, a, sem, backend),
        ProblemKind::Psa => cegar_psa_stb(riaf, a, backend),
        ProblemKind::Nsa => solve_nsa_stb_sat(riaf, a, backend),
        _ => unreachable!("routed problems have a SAT path"),
    }
}

/// Answers an acceptance problem on the selected engine, with the
/// embedded solver as SAT backend.
pub fn solve_acceptance(
    riaf: &RichIaf,
    kind: ProblemKind,
    a: &ArgumentId,
    sem: Semantics,
    engine: Engine,
    policy: QueryArgPolicy,
) -> Result<QueryVerdict, EngineError> {
    solve_acceptance_with(riaf, kind, a, sem, engine, policy, &mut DpllSolver)
}

/// Answers an acceptance problem on the selected engine and backend.
pub fn solve_acceptance_with(
    riaf: &RichIaf,
    kind: ProblemKind,
    a: &ArgumentId,
    sem: Semantics,
    engine: Engine,
    policy: QueryArgPolicy,
    backend: &mut dyn SatBackend,
) -> Result<QueryVerdict, EngineError> {
    if !kind.is_acceptance() {
        return Err(ReasoningError::WrongQueryShape(kind).into());
    }
    match engine {
        Engine::Enum => Ok(acceptance_query(riaf, kind, a, sem, policy)?),
        Engine::Sat => {
            if !has_sat_path(kind, sem) {
                return Err(EngineError::NoSatPath { kind, sem });
            }
            Ok(run_sat_procedure(riaf, kind, a, sem, backend)?)
        }
        Engine::Auto => {
            if has_sat_path(kind, sem) && riaf.is_certain(a) {
                Ok(run_sat_procedure(riaf, kind, a, sem, backend)?)
            } else {
                Ok(acceptance_query(riaf, kind, a, sem, policy)?)
            }
        }
    }
}

/// Answers a verification problem; these have no SAT path and always run
/// on the oracle.
pub fn solve_verification(
    riaf: &RichIaf,
    kind: ProblemKind,
    s: &ArgumentSet,
    sem: Semantics,
    engine: Engine,
) -> Result<QueryVerdict, EngineError> {
    if kind.is_acceptance() {
        return Err(ReasoningError::WrongQueryShape(kind).into());
    }
    if engine == Engine::Sat {
        return Err(EngineError::NoSatPath { kind, sem });
    }
    Ok(verification_query(riaf, kind, s, sem)?)
}
