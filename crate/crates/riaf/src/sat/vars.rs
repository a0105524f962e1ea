//! Mapping between semantic variables and DIMACS indices.

use std::collections::BTreeMap;
use std::fmt;

use crate::core::{ArgumentId, RichIaf};

/// A semantic variable of the encodings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemVar {
    /// y(a): the argument appears in the completion.
    Present(ArgumentId),
    /// r(a,b): the attack appears in the completion.
    Attack(ArgumentId, ArgumentId),
    /// x(a): the argument belongs to the extension.
    Member(ArgumentId),
    /// z(a): the argument is defeated by the extension.
    Defeated(ArgumentId),
    /// t(b,a): the attack (b,a) is present and its source is a member,
    /// witnessing the defeat of a.
    DefeatWitness(ArgumentId, ArgumentId),
}

impl fmt::Display for SemVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemVar::Present(a) => write!(f, "y {a}"),
            SemVar::Attack(a, b) => write!(f, "r {a} {b}"),
            SemVar::Member(a) => write!(f, "x {a}"),
            SemVar::Defeated(a) => write!(f, "z {a}"),
            SemVar::DefeatWitness(b, a) => write!(f, "t {b} {a}"),
        }
    }
}

/// Bidirectional map from semantic variables to positive DIMACS indices.
///
/// Allocation order is fixed for reproducible output: all y, then all r
/// over the union of the three attack relations, then all x, then (for
/// encodings that track defeat) all z and all t, each block sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpace {
    by_index: Vec<SemVar>,
    by_var: BTreeMap<SemVar, i32>,
}

impl VarSpace {
    pub fn new(riaf: &RichIaf, with_defeat: bool) -> Self {
        let args = riaf.all_args();
        let pairs = riaf.attack_union();
        let mut by_index = Vec::new();
        by_index.extend(args.iter().cloned().map(SemVar::Present));
        by_index.extend(pairs.iter().cloned().map(|(a, b)| SemVar::Attack(a, b)));
        by_index.extend(args.iter().cloned().map(SemVar::Member));
        if with_defeat {
            by_index.extend(args.iter().cloned().map(SemVar::Defeated));
            by_index.extend(pairs.iter().cloned().map(|(b, a)| SemVar::DefeatWitness(b, a)));
        }
        let by_var = by_index
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as i32 + 1))
            .collect();
        VarSpace { by_index, by_var }
    }

    pub fn num_vars(&self) -> usize {
        self.by_index.len()
    }

    pub fn lookup(&self, var: &SemVar) -> Option<i32> {
        self.by_var.get(var).copied()
    }

    pub fn index_of(&self, var: &SemVar) -> i32 {
        self.lookup(var)
            .unwrap_or_else(|| panic!("variable {var} is not allocated"))
    }

    pub fn semantics_of(&self, index: i32) -> &SemVar {
        &self.by_index[(index - 1) as usize]
    }

    /// Variables in index order, 1-based.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &SemVar)> {
        self.by_index.iter().enumerate().map(|(i, v)| (i as i32 + 1, v))
    }

    pub fn present(&self, a: &ArgumentId) -> i32 {
        self.index_of(&SemVar::Present(a.clone()))
    }

    pub fn attack(&self, src: &ArgumentId, dst: &ArgumentId) -> i32 {
        self.index_of(&SemVar::Attack(src.clone(), dst.clone()))
    }

    pub fn member(&self, a: &ArgumentId) -> i32 {
        self.index_of(&SemVar::Member(a.clone()))
    }

    pub fn defeated(&self, a: &ArgumentId) -> i32 {
        self.index_of(&SemVar::Defeated(a.clone()))
    }

    pub fn defeat_witness(&self, src: &ArgumentId, dst: &ArgumentId) -> i32 {
        self.index_of(&SemVar::DefeatWitness(src.clone(), dst.clone()))
    }

    /// True when `other` allocates the same indices for a prefix of this
    /// space (the defeat-free space is a prefix of the defeat-tracking one).
    pub fn extends(&self, other: &VarSpace) -> bool {
        other.by_index.len() <= self.by_index.len()
            && other.by_index.iter().zip(&self.by_index).all(|(a, b)| a == b)
    }
}
