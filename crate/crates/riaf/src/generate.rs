//! Seeded random instance generator, used by the CLI and the differential
//! test suites. Output is a pure function of the parameters and the seed.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::core::{ArgumentId, RichIaf};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    pub num_args: usize,
    pub num_uncertain_args: usize,
    /// Probability that an ordered pair is a certain attack.
    pub attack_prob: f64,
    /// Probability that a pair not drawn as certain is an uncertain attack.
    pub uncertain_attack_prob: f64,
    /// Probability that an unordered pair untouched by the attack draws
    /// becomes a conflict with uncertain direction.
    pub sym_prob: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("uncertain argument count {uncertain} exceeds argument count {total}")]
    TooManyUncertain { uncertain: usize, total: usize },
    #[error("{name} must be a probability in [0,1], got {value}")]
    ProbabilityOutOfRange { name: &'static str, value: f64 },
}

fn check_prob(name: &'static str, value: f64) -> Result<(), GenerateError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(GenerateError::ProbabilityOutOfRange { name, value })
    }
}

/// Samples a framework with `num_args` arguments named `a0..`, of which
/// `num_uncertain_args` uniformly chosen ones are uncertain. Each ordered
/// pair becomes a certain attack with probability `attack_prob`, otherwise
/// an uncertain attack with probability `uncertain_attack_prob`; each
/// unordered pair of distinct arguments not used in either direction then
/// becomes an uncertain conflict with probability `sym_prob`. Collisions
/// are impossible by construction, so the result always validates.
pub fn generate(params: &GeneratorParams, seed: u64) -> Result<RichIaf, GenerateError> {
    if params.num_uncertain_args > params.num_args {
        return Err(GenerateError::TooManyUncertain {
            uncertain: params.num_uncertain_args,
            total: params.num_args,
        });
    }
    check_prob("attack-prob", params.attack_prob)?;
    check_prob("uncertain-attack-prob", params.uncertain_attack_prob)?;
    check_prob("sym-prob", params.sym_prob)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<ArgumentId> = (0..params.num_args)
        .map(|i| ArgumentId::new(format!("a{i}")).expect("generated names are valid"))
        .collect();

    let uncertain_indices: BTreeSet<usize> =
        rand::seq::index::sample(&mut rng, params.num_args, params.num_uncertain_args)
            .into_iter()
            .collect();

    let mut certain_args = BTreeSet::new();
    let mut uncertain_args = BTreeSet::new();
    for (i, name) in names.iter().enumerate() {
        if uncertain_indices.contains(&i) {
            uncertain_args.insert(name.clone());
        } else {
            certain_args.insert(name.clone());
        }
    }

    let mut certain_attacks = BTreeSet::new();
    let mut uncertain_attacks = BTreeSet::new();
    for i in 0..params.num_args {
        for j in 0..params.num_args {
            let pair = (names[i].clone(), names[j].clone());
            if rng.gen::<f64>() < params.attack_prob {
                certain_attacks.insert(pair);
            } else if rng.gen::<f64>() < params.uncertain_attack_prob {
                uncertain_attacks.insert(pair);
            }
        }
    }

    let mut conflicts = BTreeSet::new();
    for i in 0..params.num_args {
        for j in i + 1..params.num_args {
            let forward = (names[i].clone(), names[j].clone());
            let backward = (names[j].clone(), names[i].clone());
            let used = certain_attacks.contains(&forward)
                || certain_attacks.contains(&backward)
                || uncertain_attacks.contains(&forward)
                || uncertain_attacks.contains(&backward);
            if !used && rng.gen::<f64>() < params.sym_prob {
                conflicts.insert(forward);
            }
        }
    }

    Ok(
        RichIaf::new(certain_args, uncertain_args, certain_attacks, uncertain_attacks, conflicts)
            .expect("generated instance is disjoint and closed by construction"),
    )
}
