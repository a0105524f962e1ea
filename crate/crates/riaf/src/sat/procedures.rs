//! Decision procedures built on the encodings: single-call solving for
//! the first-level acceptance problems and counterexample-guided loops for
//! the second-level ones.

use crate::core::{ArgumentId, ArgumentSet, ArgumentationFramework, RichIaf};
use crate::reasoning::{QueryVerdict, ReasoningError};
use crate::semantics::Semantics;

use super::cnf::CnfFormula;
use super::encode::{encode_ad, encode_stb, encode_structure};
use super::solver::{Model, SatBackend, SatOutcome};
use super::vars::VarSpace;
use super::SatError;

// Credulous acceptance coincides for ad, co and pr, so those three share
// the admissibility encoding; stable gets its own.
enum BaseEncoding {
    Ad,
    Stb,
}

fn base_for(problem: &'static str, sem: Semantics) -> Result<BaseEncoding, SatError> {
    match sem {
        Semantics::Ad | Semantics::Co | Semantics::Pr => Ok(BaseEncoding::Ad),
        Semantics::Stb => Ok(BaseEncoding::Stb),
        Semantics::Gr | Semantics::Cf => {
            Err(SatError::UnsupportedSemantics { problem, semantics: sem })
        }
    }
}

fn full_encoding(riaf: &RichIaf, base: &BaseEncoding) -> CnfFormula {
    let semantics = match base {
        BaseEncoding::Ad => encode_ad(riaf),
        BaseEncoding::Stb => encode_stb(riaf),
    };
    encode_structure(riaf).and(semantics)
}

fn check_certain(riaf: &RichIaf, a: &ArgumentId) -> Result<(), SatError> {
    if !riaf.is_declared(a) {
        return Err(ReasoningError::UndeclaredArgument(a.clone()).into());
    }
    if !riaf.is_certain(a) {
        return Err(ReasoningError::UncertainQueryArgument(a.clone()).into());
    }
    Ok(())
}

/// Completion read off the y and r variables of a model. An attack counts
/// only when both endpoints are present; r variables of certain attacks
/// stay unit-forced even when an endpoint is absent.
pub(crate) fn decode_completion(
    riaf: &RichIaf,
    vars: &VarSpace,
    model: &Model,
) -> ArgumentationFramework {
    let args: std::collections::BTreeSet<ArgumentId> = riaf
        .all_args()
        .into_iter()
        .filter(|a| model.value(vars.present(a)))
        .collect();
    let attacks = riaf
        .attack_union()
        .into_iter()
        .filter(|(s, d)| {
            model.value(vars.attack(s, d)) && args.contains(s) && args.contains(d)
        })
        .collect();
    ArgumentationFramework::new(args, attacks).expect("decoded endpoints are present")
}

/// Extension read off the x variables of a model.
pub(crate) fn decode_extension(riaf: &RichIaf, vars: &VarSpace, model: &Model) -> ArgumentSet {
    riaf.all_args()
        .into_iter()
        .filter(|a| model.value(vars.member(a)) && model.value(vars.present(a)))
        .collect()
}

// Literals over all y and r variables pinning exactly the models of one
// completion. An r variable of a certain attack is forced true by the
// structure formula even when an endpoint is absent, so it must be assumed
// true, not read off the completion.
fn completion_assumptions(
    riaf: &RichIaf,
    vars: &VarSpace,
    completion: &ArgumentationFramework,
) -> Vec<i32> {
    let mut assumptions = Vec::new();
    for a in riaf.all_args() {
        let lit = vars.present(&a);
        assumptions.push(if completion.contains_argument(&a) { lit } else { -lit });
    }
    for (s, d) in riaf.attack_union() {
        let lit = vars.attack(&s, &d);
        let forced_unit = riaf.certain_attacks().contains(&(s.clone(), d.clone()));
        let value = completion.contains_attack(&s, &d) || forced_unit;
        assumptions.push(if value { lit } else { -lit });
    }
    assumptions
}

fn blocking_clause(assumptions: &[i32]) -> Vec<i32> {
    assumptions.iter().map(|&l| -l).collect()
}

/// Loop counters of a CEGAR run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CegarStats {
    /// Abstraction solves performed.
    pub iterations: usize,
    /// Completions refuted and blocked; at most the completion count.
    pub blocked: usize,
}

/// Possible credulous acceptance: one satisfiability call on the
/// structure formula, the base semantics formula and the unit x(a).
pub fn solve_pca_sat(
    riaf: &RichIaf,
    a: &ArgumentId,
    sem: Semantics,
    backend: &mut dyn SatBackend,
) -> Result<QueryVerdict, SatError> {
    check_certain(riaf, a)?;
    let base = base_for("PCA", sem)?;
    let cnf = full_encoding(riaf, &base);
    let vars = cnf.var_space().clone();
    let cnf = cnf.with_unit(vars.member(a));
    match backend.solve(cnf.num_vars(), cnf.clauses(), &[])? {
        SatOutcome::Satisfiable(model) => Ok(QueryVerdict {
            answer: true,
            witness: Some(decode_completion(riaf, &vars, &model)),
            extension_witness: Some(decode_extension(riaf, &vars, &model)),
        }),
        SatOutcome::Unsatisfiable => Ok(QueryVerdict::bare(false)),
    }
}

/// Necessary skeptical acceptance under stable: unsatisfiability of the
/// structure formula, the stable formula and the unit ¬x(a). A model is a
/// counterexample completion with a stable extension avoiding the
/// argument.
pub fn solve_nsa_stb_sat(
    riaf: &RichIaf,
    a: &ArgumentId,
    backend: &mut dyn SatBackend,
) -> Result<QueryVerdict, SatError> {
    check_certain(riaf, a)?;
    let cnf = encode_structure(riaf).and(encode_stb(riaf));
    let vars = cnf.var_space().clone();
    let cnf = cnf.with_unit(-vars.member(a));
    match backend.solve(cnf.num_vars(), cnf.clauses(), &[])? {
        SatOutcome::Unsatisfiable => Ok(QueryVerdict::bare(true)),
        SatOutcome::Satisfiable(model) => Ok(QueryVerdict {
            answer: false,
            witness: Some(decode_completion(riaf, &vars, &model)),
            extension_witness: Some(decode_extension(riaf, &vars, &model)),
        }),
    }
}

/// Possible skeptical acceptance under stable, by counterexample-guided
/// search over completions.
///
/// Phase one proposes completions with a stable extension containing the
/// argument and checks each for a stable extension avoiding it; absence
/// proves skeptical acceptance in that completion. Phase two scans the
/// remaining completions for one with no stable extension at all, where
/// skeptical acceptance holds vacuously. Refuted completions are blocked,
/// so the loop runs at most once per completion.
pub fn cegar_psa_stb(
    riaf: &RichIaf,
    a: &ArgumentId,
    backend: &mut dyn SatBackend,
) -> Result<QueryVerdict, SatError> {
    cegar_psa_stb_with_stats(riaf, a, backend).map(|(verdict, _)| verdict)
}

pub fn cegar_psa_stb_with_stats(
    riaf: &RichIaf,
    a: &ArgumentId,
    backend: &mut dyn SatBackend,
) -> Result<(QueryVerdict, CegarStats), SatError> {
    check_certain(riaf, a)?;
    let structure = encode_structure(riaf);
    let full = structure.clone().and(encode_stb(riaf));
    let vars = full.var_space().clone();
    let member = vars.member(a);
    let mut blocked: Vec<Vec<i32>> = Vec::new();
    let mut stats = CegarStats::default();

    loop {
        stats.iterations += 1;
        let mut clauses = full.clauses().to_vec();
        clauses.push(vec![member]);
        clauses.extend(blocked.iter().cloned());
        match backend.solve(full.num_vars(), &clauses, &[])? {
            SatOutcome::Unsatisfiable => break,
            SatOutcome::Satisfiable(model) => {
                let completion = decode_completion(riaf, &vars, &model);
                let extension = decode_extension(riaf, &vars, &model);
                let assumptions = completion_assumptions(riaf, &vars, &completion);
                let mut check = full.clauses().to_vec();
                check.push(vec![-member]);
                match backend.solve(full.num_vars(), &check, &assumptions)? {
                    SatOutcome::Unsatisfiable => {
                        return Ok((
                            QueryVerdict {
                                answer: true,
                                witness: Some(completion),
                                extension_witness: Some(extension),
                            },
                            stats,
                        ));
                    }
                    SatOutcome::Satisfiable(_) => {
                        blocked.push(blocking_clause(&assumptions));
                        stats.blocked += 1;
                    }
                }
            }
        }
    }

    // No remaining completion has a stable extension containing the
    // argument; look for one with an empty stable family.
    loop {
        stats.iterations += 1;
        let mut clauses = structure.clauses().to_vec();
        clauses.extend(blocked.iter().cloned());
        match backend.solve(structure.num_vars(), &clauses, &[])? {
            SatOutcome::Unsatisfiable => return Ok((QueryVerdict::bare(false), stats)),
            SatOutcome::Satisfiable(model) => {
                let completion = decode_completion(riaf, structure.var_space(), &model);
                let assumptions = completion_assumptions(riaf, &vars, &completion);
                match backend.solve(full.num_vars(), full.clauses(), &assumptions)? {
                    SatOutcome::Unsatisfiable => {
                        return Ok((
                            QueryVerdict {
                                answer: true,
                                witness: Some(completion),
                                extension_witness: None,
                            },
                            stats,
                        ));
                    }
                    SatOutcome::Satisfiable(_) => {
                        blocked.push(blocking_clause(&assumptions));
                        stats.blocked += 1;
                    }
                }
            }
        }
    }
}

/// Necessary credulous acceptance, by counterexample-guided search: each
/// candidate completion is checked for an extension containing the
/// argument; a completion without one refutes the query.
pub fn cegar_nca(
    riaf: &RichIaf,
    a: &ArgumentId,
    sem: Semantics,
    backend: &mut dyn SatBackend,
) -> Result<QueryVerdict, SatError> {
    cegar_nca_with_stats(riaf, a, sem, backend).map(|(verdict, _)| verdict)
}

pub fn cegar_nca_with_stats(
    riaf: &RichIaf,
    a: &ArgumentId,
    sem: Semantics,
    backend: &mut dyn SatBackend,
) -> Result<(QueryVerdict, CegarStats), SatError> {
    check_certain(riaf, a)?;
    let base = base_for("NCA", sem)?;
    let structure = encode_structure(riaf);
    let full = structure.clone().and(match base {
        BaseEncoding::Ad => encode_ad(riaf),
        BaseEncoding::Stb => encode_stb(riaf),
    });
    let vars = full.var_space().clone();
    let member = vars.member(a);
    let mut blocked: Vec<Vec<i32>> = Vec::new();
    let mut stats = CegarStats::default();

    loop {
        stats.iterations += 1;
        let mut clauses = structure.clauses().to_vec();
        clauses.extend(blocked.iter().cloned());
        match backend.solve(structure.num_vars(), &clauses, &[])? {
            SatOutcome::Unsatisfiable => return Ok((QueryVerdict::bare(true), stats)),
            SatOutcome::Satisfiable(model) => {
                let completion = decode_completion(riaf, structure.var_space(), &model);
                let assumptions = completion_assumptions(riaf, &vars, &completion);
                let mut check = full.clauses().to_vec();
                check.push(vec![member]);
                match backend.solve(full.num_vars(), &check, &assumptions)? {
                    SatOutcome::Unsatisfiable => {
                        return Ok((
                            QueryVerdict {
                                answer: false,
                                witness: Some(completion),
                                extension_witness: None,
                            },
                            stats,
                        ));
                    }
                    SatOutcome::Satisfiable(_) => {
                        blocked.push(blocking_clause(&assumptions));
                        stats.blocked += 1;
                    }
                }
            }
        }
    }
}
