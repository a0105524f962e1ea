//! Clausal encodings of the completion structure and of the
//! conflict-free, admissible and stable semantics.
//!
//! Over the variables y (argument present), r (attack present) and x
//! (argument in the extension), the structure formula pins the certain
//! parts, requires every applicable conflict pair to be oriented at least
//! one way, and guards everything incident to an absent argument:
//!
//! - y(a) for every certain a; r(a,b) for every certain attack;
//! - r(a,b) ∨ r(b,a) per conflict pair, weakened by ¬y for each uncertain
//!   endpoint (an absent endpoint cancels the obligation);
//! - for each uncertain a: ¬y(a) → ¬x(a), and ¬y(a) → ¬r(..) for every
//!   uncertain attack or conflict edge incident to a.
//!
//! Satisfying assignments restricted to (y, r) correspond one-to-one to
//! completions.
//!
//! The semantics formulas add, per attack (a,b) of the union:
//! conflict-freeness (y(a) ∧ y(b) ∧ r(a,b)) → (¬x(a) ∨ ¬x(b)); and defeat
//! tracking through z (argument defeated) defined via one witness variable
//! t per potential attack. Admissibility forces the defeat of every
//! present attacker of a member; stability forces the defeat of every
//! present non-member.

use crate::core::RichIaf;

use super::cnf::CnfFormula;
use super::vars::VarSpace;

/// The completion-structure formula.
pub fn encode_structure(riaf: &RichIaf) -> CnfFormula {
    let vars = VarSpace::new(riaf, false);
    let mut cnf = CnfFormula::new(vars);

    for a in riaf.certain_args() {
        let lit = cnf.var_space().present(a);
        cnf.push(vec![lit]);
    }
    for (s, d) in riaf.certain_attacks() {
        let lit = cnf.var_space().attack(s, d);
        cnf.push(vec![lit]);
    }
    for (u, v) in riaf.conflict_pairs() {
        let mut clause = vec![
            cnf.var_space().attack(&u, &v),
            cnf.var_space().attack(&v, &u),
        ];
        // An absent uncertain endpoint cancels the orientation obligation.
        for end in [&u, &v] {
            if !riaf.is_certain(end) {
                clause.push(-cnf.var_space().present(end));
            }
        }
        cnf.push(clause);
    }
    for a in riaf.uncertain_args() {
        let present = cnf.var_space().present(a);
        cnf.push(vec![present, -cnf.var_space().member(a)]);
        for (s, d) in riaf.uncertain_attacks() {
            if s == a || d == a {
                cnf.push(vec![present, -cnf.var_space().attack(s, d)]);
            }
        }
        for (s, d) in riaf.uncertain_conflicts() {
            if s == a || d == a {
                cnf.push(vec![present, -cnf.var_space().attack(s, d)]);
            }
        }
    }
    cnf
}

fn cf_clauses(riaf: &RichIaf, cnf: &mut CnfFormula) {
    for (a, b) in riaf.attack_union() {
        let clause = vec![
            -cnf.var_space().present(&a),
            -cnf.var_space().present(&b),
            -cnf.var_space().attack(&a, &b),
            -cnf.var_space().member(&a),
            -cnf.var_space().member(&b),
        ];
        cnf.push(clause);
    }
}

fn defeat_clauses(riaf: &RichIaf, cnf: &mut CnfFormula) {
    let union = riaf.attack_union();
    for a in riaf.all_args() {
        let mut definition = vec![-cnf.var_space().defeated(&a)];
        let attackers: Vec<_> = union.iter().filter(|(_, dst)| *dst == a).collect();
        for (b, _) in &attackers {
            definition.push(cnf.var_space().defeat_witness(b, &a));
        }
        cnf.push(definition);
        for (b, _) in &attackers {
            let witness = cnf.var_space().defeat_witness(b, &a);
            cnf.push(vec![-witness, cnf.var_space().member(b)]);
            cnf.push(vec![-witness, cnf.var_space().present(b)]);
            cnf.push(vec![-witness, cnf.var_space().attack(b, &a)]);
        }
    }
}

/// Conflict-freeness: one clause per potential attack.
pub fn encode_cf(riaf: &RichIaf) -> CnfFormula {
    let mut cnf = CnfFormula::new(VarSpace::new(riaf, false));
    cf_clauses(riaf, &mut cnf);
    cnf
}

/// Defeat definitions: z(a) requires a present member attacker, via one
/// witness variable per potential attack.
pub fn encode_defeat_defs(riaf: &RichIaf) -> CnfFormula {
    let mut cnf = CnfFormula::new(VarSpace::new(riaf, true));
    defeat_clauses(riaf, &mut cnf);
    cnf
}

/// Admissibility: conflict-freeness, plus every present attacker of a
/// member is defeated, plus the defeat definitions.
pub fn encode_ad(riaf: &RichIaf) -> CnfFormula {
    let mut cnf = CnfFormula::new(VarSpace::new(riaf, true));
    cf_clauses(riaf, &mut cnf);
    let union = riaf.attack_union();
    for a in riaf.all_args() {
        for (b, _) in union.iter().filter(|(_, dst)| *dst == a) {
            let clause = vec![
                -cnf.var_space().member(&a),
                -cnf.var_space().present(&a),
                -cnf.var_space().present(b),
                -cnf.var_space().attack(b, &a),
                cnf.var_space().defeated(b),
            ];
            cnf.push(clause);
        }
    }
    defeat_clauses(riaf, &mut cnf);
    cnf
}

/// Stability: conflict-freeness, plus every present non-member is
/// defeated, plus the defeat definitions.
pub fn encode_stb(riaf: &RichIaf) -> CnfFormula {
    let mut cnf = CnfFormula::new(VarSpace::new(riaf, true));
    cf_clauses(riaf, &mut cnf);
    for a in riaf.all_args() {
        let clause = vec![
            cnf.var_space().member(&a),
            -cnf.var_space().present(&a),
            cnf.var_space().defeated(&a),
        ];
        cnf.push(clause);
    }
    defeat_clauses(riaf, &mut cnf);
    cnf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::lift_af;
    use crate::sat::vars::SemVar;
    use crate::test_util::{arg, empty_riaf, five_arg_af, rich_conflict_riaf, two_way_conflict, uncertain_iaf};

    fn clause_of(vars: &VarSpace, lits: &[(&str, i32)]) -> Vec<i32> {
        // (token, sign) pairs like ("y a", 1), ("r a b", -1)
        lits.iter()
            .map(|(token, sign)| {
                let var = vars
                    .iter()
                    .find(|(_, v)| v.to_string() == *token)
                    .unwrap_or_else(|| panic!("no variable {token}"))
                    .0;
                var * sign
            })
            .collect()
    }

    #[test]
    fn structure_of_two_way_conflict() {
        let riaf = two_way_conflict();
        let cnf = encode_structure(&riaf);
        let vars = cnf.var_space();
        let expected = vec![
            clause_of(vars, &[("y a", 1)]),
            clause_of(vars, &[("y b", 1)]),
            clause_of(vars, &[("r a b", 1), ("r b a", 1)]),
        ];
        assert_eq!(cnf.clauses(), expected.as_slice());
    }

    #[test]
    fn structure_guards_uncertain_attacks() {
        let cnf = encode_structure(&uncertain_iaf());
        let vars = cnf.var_space();
        let guard = clause_of(vars, &[("y f", 1), ("r f d", -1)]);
        assert!(cnf.clauses().contains(&guard));
        // Presence of f also gates its membership variable.
        let member_guard = clause_of(vars, &[("y f", 1), ("x f", -1)]);
        assert!(cnf.clauses().contains(&member_guard));
    }

    #[test]
    fn structure_guards_conflicts_with_uncertain_endpoint() {
        use std::collections::BTreeSet;
        use crate::core::RichIaf;
        use crate::test_util::{attack_set, id_set};
        let riaf = RichIaf::new(
            id_set(["a"]),
            id_set(["u"]),
            BTreeSet::new(),
            BTreeSet::new(),
            attack_set([("a", "u")]),
        )
        .unwrap();
        let cnf = encode_structure(&riaf);
        let vars = cnf.var_space();
        // Weakened orientation clause and the two direction guards.
        let weakened = clause_of(vars, &[("r a u", 1), ("r u a", 1), ("y u", -1)]);
        let guard_fwd = clause_of(vars, &[("y u", 1), ("r a u", -1)]);
        let guard_bwd = clause_of(vars, &[("y u", 1), ("r u a", -1)]);
        for clause in [&weakened, &guard_fwd, &guard_bwd] {
            assert!(cnf.clauses().contains(clause), "missing {clause:?}");
        }
    }

    #[test]
    fn empty_framework_encodes_to_nothing() {
        let cnf = encode_structure(&empty_riaf());
        assert_eq!(cnf.num_vars(), 0);
        assert!(cnf.clauses().is_empty());
    }

    #[test]
    fn cf_clause_counts() {
        assert_eq!(encode_cf(&two_way_conflict()).clauses().len(), 2);
        assert_eq!(encode_cf(&rich_conflict_riaf()).clauses().len(), 7);
        assert_eq!(encode_cf(&empty_riaf()).clauses().len(), 0);
    }

    #[test]
    fn self_attack_cf_clause_dedupes_literals() {
        let riaf = lift_af(&crate::test_util::af(["a"], [("a", "a")]));
        let cnf = encode_cf(&riaf);
        assert_eq!(cnf.clauses().len(), 1);
        assert_eq!(cnf.clauses()[0].len(), 3); // ¬y(a), ¬r(a,a), ¬x(a)
    }

    #[test]
    fn defeat_definitions_shape() {
        let riaf = lift_af(&five_arg_af());
        let cnf = encode_defeat_defs(&riaf);
        let vars = cnf.var_space();
        // Target a is potentially attacked by b, c and e.
        let definition = clause_of(
            vars,
            &[("z a", -1), ("t b a", 1), ("t c a", 1), ("t e a", 1)],
        );
        assert!(cnf.clauses().contains(&definition));
        let witness_defs = cnf
            .clauses()
            .iter()
            .filter(|c| {
                c.len() == 2
                    && matches!(vars.semantics_of(c[0].abs()), SemVar::DefeatWitness(_, dst) if *dst == arg("a"))
            })
            .count();
        assert_eq!(witness_defs, 9);

        // An argument with no potential attacker gets the bare negative unit.
        let isolated = lift_af(&crate::test_util::af(["a"], []));
        let cnf = encode_defeat_defs(&isolated);
        assert_eq!(cnf.clauses(), &[vec![-cnf.var_space().defeated(&arg("a"))]]);

        let riaf = two_way_conflict();
        let cnf = encode_defeat_defs(&riaf);
        let vars = cnf.var_space();
        let definition = clause_of(vars, &[("z b", -1), ("t a b", 1)]);
        assert!(cnf.clauses().contains(&definition));
        // b's definition plus three witness clauses for t(a,b).
        let about_b: Vec<_> = cnf
            .clauses()
            .iter()
            .filter(|c| c.contains(&-vars.defeated(&arg("b"))) || c.contains(&-vars.defeat_witness(&arg("a"), &arg("b"))))
            .collect();
        assert_eq!(about_b.len(), 4);
    }

    #[test]
    fn empty_extension_satisfies_admissibility_everywhere() {
        for riaf in [lift_af(&five_arg_af()), uncertain_iaf(), rich_conflict_riaf()] {
            let cnf = encode_structure(&riaf).and(encode_ad(&riaf));
            let vars = cnf.var_space().clone();
            let mut assumptions: Vec<i32> = Vec::new();
            for a in riaf.all_args() {
                assumptions.push(-vars.member(&a));
                assumptions.push(-vars.defeated(&a));
            }
            let mut solver = crate::sat::solver::DpllSolver;
            use crate::sat::solver::SatBackend;
            let outcome = solver
                .solve(cnf.num_vars(), cnf.clauses(), &assumptions)
                .unwrap();
            assert!(matches!(outcome, crate::sat::solver::SatOutcome::Satisfiable(_)));
        }
    }
}
