//! Reference external DIMACS solver: reads a CNF file, prints `SAT` and a
//! model line of space-separated literals, or `UNSAT`. Serves as the
//! process behind the external-solver adapter.

use std::process::ExitCode;

use riaf::sat::{parse_dimacs, DpllSolver, SatBackend, SatOutcome};

fn main() -> ExitCode {
    let mut args = std::env::args().skip(1);
    let (Some(path), None) = (args.next(), args.next()) else {
        eprintln!("usage: riaf-dimacs-solve <file.cnf>");
        return ExitCode::from(1);
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {path}: {err}");
            return ExitCode::from(1);
        }
    };
    let (num_vars, clauses) = match parse_dimacs(&text) {
        Ok(parsed) => parsed,
        Err(err) => {
            eprintln!("error: {path}: {err}");
            return ExitCode::from(1);
        }
    };
    match DpllSolver.solve(num_vars, &clauses, &[]).expect("embedded solver is total") {
        SatOutcome::Satisfiable(model) => {
            println!("SAT");
            let mut line = String::new();
            for var in 1..=num_vars as i32 {
                let lit = if model.value(var) { var } else { -var };
                line.push_str(&lit.to_string());
                line.push(' ');
            }
            line.push('0');
            println!("{line}");
        }
        SatOutcome::Unsatisfiable => println!("UNSAT"),
    }
    ExitCode::SUCCESS
}
