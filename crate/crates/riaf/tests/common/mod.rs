//! Shared helpers for the integration suites.

use riaf::generate::{generate, GeneratorParams};
use riaf::RichIaf;

/// Number of uncertain elements: arguments, attacks and conflict pairs.
pub fn uncertainty_size(riaf: &RichIaf) -> usize {
    riaf.uncertain_args().len()
        + riaf.uncertain_attacks().len()
        + riaf.uncertain_conflicts().len() / 2
}

/// Deterministic instance suite: seeds count up from `first_seed` and
/// instances failing the caps are skipped, so the suite is reproducible.
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
