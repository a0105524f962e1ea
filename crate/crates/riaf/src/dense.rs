//! Bitmask view of a plain framework for subset search. Supports up to 64
//! arguments; instances are desk scale so that is not a practical limit.

use crate::core::{ArgumentId, ArgumentSet, ArgumentationFramework};
use crate::semantics::{Semantics, SemanticsError};

pub(crate) struct DenseAf {
    names: Vec<ArgumentId>,
    attacks_from: Vec<u64>,
    attackers_of: Vec<u64>,
    all: u64,
}

impl DenseAf {
    pub fn new(af: &ArgumentationFramework) -> Result<Self, SemanticsError> {
        let names: Vec<ArgumentId> = af.arguments().iter().cloned().collect();
        let n = names.len();
        if n > 64 {
            return Err(SemanticsError::TooManyArguments(n));
        }
        let mut attacks_from = vec![0u64; n];
        let mut attackers_of = vec![0u64; n];
        let index =
            |a: &ArgumentId| names.binary_search(a).expect("attack endpoint is declared");
        for (src, dst) in af.attacks() {
            let (s, d) = (index(src), index(dst));
            attacks_from[s] |= 1 << d;
            attackers_of[d] |= 1 << s;
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(DenseAf { names, attacks_from, attackers_of, all })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, a: &ArgumentId) -> Option<usize> {
        self.names.binary_search(a).ok()
    }

    pub fn mask_of(&self, s: &ArgumentSet) -> Option<u64> {
        let mut mask = 0u64;
        for a in s.iter() {
            mask |= 1 << self.index_of(a)?;
        }
        Some(mask)
    }

    pub fn set_of(&self, mask: u64) -> ArgumentSet {
        self.names
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect()
    }

    fn attacked_by(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= self.attacks_from[i];
            m &= m - 1;
        }
        out
    }

    pub fn conflict_free(&self, mask: u64) -> bool {
        self.attacked_by(mask) & mask == 0
    }

    pub fn admissible(&self, mask: u64) -> bool {
        if !self.conflict_free(mask) {
            return false;
        }
        let countered = self.attacked_by(mask);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            if self.attackers_of[i] & !countered != 0 {
                return false;
            }
            m &= m - 1;
        }
        true
    }

    /// Arguments all of whose attackers are attacked by `mask`; the
    /// characteristic function of the grounded fixpoint.
    fn defended_by(&self, mask: u64) -> u64 {
        let countered = self.attacked_by(mask);
        let mut out = 0u64;
        for i in 0..self.len() {
            if self.attackers_of[i] & !countered == 0 {
                out |= 1 << i;
            }
        }
        out
    }

    pub fn complete(&self, mask: u64) -> bool {
        self.admissible(mask) && self.defended_by(mask) & !mask == 0
    }

    pub fn stable(&self, mask: u64) -> bool {
        self.conflict_free(mask) && self.attacked_by(mask) | mask == self.all
    }

    pub fn grounded(&self) -> u64 {
        let mut current = 0u64;
        loop {
            let next = self.defended_by(current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Mask-level counterpart of the definitional extension check; the
    /// two are cross-checked exhaustively in the semantics tests.
    pub fn is_extension_mask(&self, mask: u64, sem: Semantics) -> bool {
        match sem {
            Semantics::Cf => self.conflict_free(mask),
            Semantics::Ad => self.admissible(mask),
            Semantics::Co => self.complete(mask),
            Semantics::Gr => mask == self.grounded(),
            Semantics::Stb => self.stable(mask),
            Semantics::Pr => {
                if !self.complete(mask) {
                    return false;
                }
                // No complete proper superset: walk the submasks of the
                // complement.
                let complement = self.all & !mask;
                let mut extra = complement;
                while extra != 0 {
                    if self.complete(mask | extra) {
                        return false;
                    }
                    extra = (extra - 1) & complement;
                }
                true
            }
        }
    }

    fn subset_masks(&self) -> impl Iterator<Item = u64> {
        let n = self.len();
        // 2^n masks; callers are desk scale.
        (0u128..(1u128 << n)).map(|m| m as u64)
    }

    /// All extension masks under `sem`, unsorted.
    pub fn extensions(&self, sem: Semantics) -> Vec<u64> {
        match sem {
            Semantics::Gr => vec![self.grounded()],
            Semantics::Cf => self.subset_masks().filter(|&m| self.conflict_free(m)).collect(),
            Semantics::Ad => self.subset_masks().filter(|&m| self.admissible(m)).collect(),
            Semantics::Co => self.subset_masks().filter(|&m| self.complete(m)).collect(),
            Semantics::Stb => self.subset_masks().filter(|&m| self.stable(m)).collect(),
            Semantics::Pr => {
                let complete: Vec<u64> = self
                    .subset_masks()
                    .filter(|&m| self.complete(m))
                    .collect();
                complete
                    .iter()
                    .copied()
                    .filter(|&m| !complete.iter().any(|&o| o != m && o & m == m))
                    .collect()
            }
        }
    }

    /// True when `arg` belongs to some extension under `sem`.
    pub fn credulous(&self, arg: usize, sem: Semantics) -> bool {
        let bit = 1u64 << arg;
        match sem {
            Semantics::Gr => self.grounded() & bit != 0,
            // Credulous acceptance coincides for admissible, complete and
            // preferred: every admissible set extends to a preferred one.
            Semantics::Ad | Semantics::Co | Semantics::Pr => self
                .subset_masks()
                .any(|m| m & bit != 0 && self.admissible(m)),
            Semantics::Stb => self.subset_masks().any(|m| m & bit != 0 && self.stable(m)),
            Semantics::Cf => self.subset_masks().any(|m| m & bit != 0 && self.conflict_free(m)),
        }
    }

    /// True when `arg` belongs to every extension under `sem`; vacuously
    /// true when there is no extension (possible only for stable).
    pub fn skeptical(&self, arg: usize, sem: Semantics) -> bool {
        let bit = 1u64 << arg;
        match sem {
            Semantics::Gr => self.grounded() & bit != 0,
            // The empty set is admissible (and conflict-free), so nothing
            // is skeptically accepted.
            Semantics::Ad | Semantics::Cf => false,
            Semantics::Co => self.subset_masks().all(|m| !self.complete(m) || m & bit != 0),
            Semantics::Stb => self.subset_masks().all(|m| !self.stable(m) || m & bit != 0),
            Semantics::Pr => self.extensions(Semantics::Pr).iter().all(|&m| m & bit != 0),
        }
    }
}
