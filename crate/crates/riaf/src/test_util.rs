//! Fixture builders shared by the unit tests.

use std::collections::BTreeSet;

use crate::core::{
    lift_iaf, ArgumentId, ArgumentSet, ArgumentationFramework, AttackPair, RichIaf,
};

pub fn arg(name: &str) -> ArgumentId {
    ArgumentId::new(name).unwrap()
}

pub fn id_set<'a>(names: impl IntoIterator<Item = &'a str>) -> BTreeSet<ArgumentId> {
    names.into_iter().map(arg).collect()
}

pub fn arg_set<'a>(names: impl IntoIterator<Item = &'a str>) -> ArgumentSet {
    names.into_iter().map(arg).collect()
}

pub fn attack_set<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> BTreeSet<AttackPair> {
    pairs.into_iter().map(|(s, d)| (arg(s), arg(d))).collect()
}

pub fn af<'a>(
    args: impl IntoIterator<Item = &'a str>,
    attacks: impl IntoIterator<Item = (&'a str, &'a str)>,
) -> ArgumentationFramework {
    ArgumentationFramework::new(id_set(args), attack_set(attacks)).unwrap()
}

/// Five arguments, six attacks: b,c,e all attack a; c and d attack each
/// other; d attacks b. Complete extensions are {e}, {d,e} and {b,c,e}.
pub fn five_arg_af() -> ArgumentationFramework {
    af(
        ["a", "b", "c", "d", "e"],
        [("b", "a"), ("c", "a"), ("c", "d"), ("d", "b"), ("d", "c"), ("e", "a")],
    )
}

/// The five-argument framework with uncertain argument f and uncertain
/// attacks (e,a) and (f,d); it has six completions.
pub fn uncertain_iaf() -> RichIaf {
    lift_iaf(
        id_set(["a", "b", "c", "d", "e"]),
        id_set(["f"]),
        attack_set([("b", "a"), ("c", "a"), ("d", "b"), ("d", "c")]),
        attack_set([("e", "a"), ("f", "d")]),
    )
    .unwrap()
}

/// Like [`uncertain_iaf`] but with the certain attack (b,a) replaced by a
/// symmetric uncertain conflict between a and b; it has 18 completions.
pub fn rich_conflict_riaf() -> RichIaf {
    RichIaf::new(
        id_set(["a", "b", "c", "d", "e"]),
        id_set(["f"]),
        attack_set([("c", "a"), ("d", "b"), ("d", "c")]),
        attack_set([("e", "a"), ("f", "d")]),
        attack_set([("a", "b")]),
    )
    .unwrap()
}

/// Two certain arguments joined by one symmetric uncertain conflict; its
/// three completions are not the completion set of any conflict-free-less
/// incomplete framework.
pub fn two_way_conflict() -> RichIaf {
    RichIaf::new(
        id_set(["a", "b"]),
        BTreeSet::new(),
        BTreeSet::new(),
        BTreeSet::new(),
        attack_set([("a", "b")]),
    )
    .unwrap()
}

pub fn empty_riaf() -> RichIaf {
    RichIaf::new(
        BTreeSet::new(),
        BTreeSet::new(),
        BTreeSet::new(),
        BTreeSet::new(),
        BTreeSet::new(),
    )
    .unwrap()
}
