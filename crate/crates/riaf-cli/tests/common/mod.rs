//! Helpers for driving the binaries and building instance suites.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use riaf::generate::{generate, GeneratorParams};
use riaf::RichIaf;

pub struct RunResult {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn riaf_bin() -> &'static str {
    env!("CARGO_BIN_EXE_riaf")
}

pub fn dimacs_solve_bin() -> &'static str {
    env!("CARGO_BIN_EXE_riaf-dimacs-solve")
}

pub fn run(args: &[&str]) -> RunResult {
    let output: Output = Command::new(riaf_bin())
        .args(args)
        .output()
        .expect("binary runs");
    RunResult {
        stdout: String::from_utf8(output.stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(output.stderr).expect("stderr is utf-8"),
        code: output.status.code().expect("no signal"),
    }
}

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    path.to_str().expect("fixture path is utf-8").to_owned()
}

pub fn load_fixture(name: &str) -> RichIaf {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture exists");
    riaf::io::parse_riaf(&text).expect("fixture parses")
}

/// Number of uncertain elements: arguments, attacks and conflict pairs.
pub fn uncertainty_size(riaf: &RichIaf) -> usize {
    riaf.uncertain_args().len()
        + riaf.uncertain_attacks().len()
        + riaf.uncertain_conflicts().len() / 2
}

/// Deterministic instance suite: seeds count up from `first_seed`,
/// instances failing the filter are skipped.
pub fn seeded_suite(
    count: usize,
    params: &GeneratorParams,
    first_seed: u64,
    keep: impl Fn(&RichIaf) -> bool,
) -> Vec<(u64, RichIaf)> {
    let mut out = Vec::with_capacity(count);
    let mut seed = first_seed;
    while out.len() < count {
        let riaf = generate(params, seed).expect("suite parameters are valid");
        if keep(&riaf) {
            out.push((seed, riaf));
        }
        seed += 1;
    }
    out
}
