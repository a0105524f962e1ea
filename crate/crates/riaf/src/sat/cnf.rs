//! Clausal formulas over a [`VarSpace`].

use super::vars::VarSpace;

/// A CNF formula: a clause list over the variable space. Literals are
/// nonzero integers; negative means negated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    vars: VarSpace,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub(crate) fn new(vars: VarSpace) -> Self {
        CnfFormula { vars, clauses: Vec::new() }
    }

    pub(crate) fn push(&mut self, mut clause: Vec<i32>) {
        debug_assert!(!clause.is_empty(), "encodings never emit an empty clause");
        debug_assert!(clause
            .iter()
            .all(|&l| l != 0 && l.unsigned_abs() as usize <= self.vars.num_vars()));
        // Clauses are literal sets; drop duplicates while keeping the
        // emission order of the first occurrence.
        let mut seen = Vec::new();
        clause.retain(|&l| {
            if seen.contains(&l) {
                false
            } else {
                seen.push(l);
                true
            }
        });
        self.clauses.push(clause);
    }

    pub fn var_space(&self) -> &VarSpace {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.num_vars()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Conjunction with a formula over the same framework. One variable
    /// space must extend the other (the defeat-free space is a prefix of
    /// the defeat-tracking one); the larger space is kept and clause order
    /// is preserved.
    pub fn and(self, other: CnfFormula) -> CnfFormula {
        let vars = if self.vars.extends(&other.vars) {
            self.vars
        } else {
            assert!(
                other.vars.extends(&self.vars),
                "conjunction of formulas over unrelated variable spaces"
            );
            other.vars
        };
        let mut clauses = self.clauses;
        clauses.extend(other.clauses);
        CnfFormula { vars, clauses }
    }

    /// Conjunction with a unit clause.
    pub fn with_unit(mut self, literal: i32) -> CnfFormula {
        self.push(vec![literal]);
        self
    }
}
