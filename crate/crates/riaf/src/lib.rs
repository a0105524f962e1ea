//! Rich incomplete argumentation frameworks.
//!
//! A plain argumentation framework is a directed graph of arguments and
//! attacks, evaluated through extension semantics. This crate models
//! frameworks with three kinds of qualitative uncertainty on top of that:
//! arguments that may be absent, attacks that may be absent, and conflicts
//! whose direction is unknown. Every way of resolving the uncertainty
//! yields a plain framework called a completion.
//!
//! The crate provides:
//! - the framework data model and validation ([`core`]);
//! - extension semantics on plain frameworks ([`semantics`]);
//! - completion enumeration ([`completions`]);
//! - the eight possible/necessary decision problems answered by explicit
//!   quantification over completions ([`reasoning`]);
//! - CNF encodings of the completion structure and of conflict-free,
//!   admissible and stable semantics, an embedded SAT solver, decision
//!   procedures for the problems with a SAT path, and DIMACS export
//!   ([`sat`]);
//! - a text instance format ([`io`]) and a seeded random instance
//!   generator ([`generate`]).

pub mod completions;
pub mod core;
mod dense;
pub mod generate;
pub mod io;
pub mod reasoning;
pub mod sat;
pub mod semantics;

#[cfg(test)]
pub(crate) mod test_util;

pub use crate::core::{
    lift_af, lift_iaf, restrict, ArgumentId, ArgumentSet, ArgumentationFramework, AttackPair,
    CoreError, RichIaf,
};
pub use crate::completions::{
    completion_count_bound, enumerate_completions, is_completion, CompletionChoice, Orientation,
};
pub use crate::reasoning::{ProblemKind, QueryVerdict, ReasoningError};
pub use crate::semantics::{AcceptanceStatus, Semantics, SemanticsError};
