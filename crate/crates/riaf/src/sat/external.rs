//! Adapter for an external DIMACS solver process.
//!
//! Contract: the solver is invoked as `<command> <cnf-path>` and prints
//! `SAT` followed by a line of space-separated model literals (an optional
//! trailing 0 is ignored), or `UNSAT`. Assumptions are passed as extra
//! unit clauses, which is equivalent for one-shot solving.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;

use super::dimacs::write_dimacs;
use super::solver::{Model, SatBackend, SatOutcome};
use super::SatError;

pub struct ExternalSolver {
    command: PathBuf,
}

impl ExternalSolver {
    pub fn new(command: impl Into<PathBuf>) -> Self {
        ExternalSolver { command: command.into() }
    }
}

impl SatBackend for ExternalSolver {
    fn solve(
        &mut self,
        num_vars: usize,
        clauses: &[Vec<i32>],
        assumptions: &[i32],
    ) -> Result<SatOutcome, SatError> {
        let mut all = clauses.to_vec();
        all.extend(assumptions.iter().map(|&l| vec![l]));

        let mut file = tempfile::NamedTempFile::new()?;
        write_dimacs(num_vars, &all, &mut file)?;
        file.flush()?;

        let output = Command::new(&self.command).arg(file.path()).output()?;
        let stdout = String::from_utf8_lossy(&output.stdout);
        let mut lines = stdout.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some("UNSAT") => Ok(SatOutcome::Unsatisfiable),
            Some("SAT") => {
                let model_line = lines.next().unwrap_or("");
                let mut values = vec![false; num_vars];
                for token in model_line.split_whitespace() {
                    let literal: i32 = token.parse().map_err(|_| {
                        SatError::External(format!("bad model literal `{token}`"))
                    })?;
                    if literal == 0 {
                        break;
                    }
                    let var = literal.unsigned_abs() as usize;
                    if var > num_vars {
                        return Err(SatError::External(format!(
                            "model literal {literal} outside variable range"
                        )));
                    }
                    values[var - 1] = literal > 0;
                }
                let model = Model::new(values);
                if !model.satisfies(&all) {
                    return Err(SatError::External(
                        "reported model does not satisfy the formula".to_owned(),
                    ));
                }
                Ok(SatOutcome::Satisfiable(model))
            }
            first => Err(SatError::External(format!(
                "expected SAT or UNSAT, got {:?}",
                first.unwrap_or("<empty output>")
            ))),
        }
    }
}
