//! Embedded DPLL solver with two watched literals per clause, plus the
//! backend trait shared with the external-process adapter.
//!
//! The solver is stateless between calls: each call loads the clause list,
//! enqueues the assumptions as forced root assignments, then searches with
//! chronological backtracking. No clause learning; instances here are
//! small encodings where propagation does most of the work.

use super::SatError;

/// A satisfying assignment, total over the variable range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    values: Vec<bool>, // index var-1
}

impl Model {
    pub fn new(values: Vec<bool>) -> Self {
        Model { values }
    }

    pub fn value(&self, var: i32) -> bool {
        self.values[(var - 1) as usize]
    }

    pub fn lit_true(&self, lit: i32) -> bool {
        let v = self.value(lit.abs());
        if lit > 0 {
            v
        } else {
            !v
        }
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    pub fn satisfies(&self, clauses: &[Vec<i32>]) -> bool {
        clauses
            .iter()
            .all(|c| c.iter().any(|&l| self.lit_true(l)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatOutcome {
    Satisfiable(Model),
    Unsatisfiable,
}

impl SatOutcome {
    pub fn model(&self) -> Option<&Model> {
        match self {
            SatOutcome::Satisfiable(m) => Some(m),
            SatOutcome::Unsatisfiable => None,
        }
    }
}

/// A one-shot satisfiability procedure: formula plus assumptions in,
/// outcome out.
pub trait SatBackend {
    fn solve(
        &mut self,
        num_vars: usize,
        clauses: &[Vec<i32>],
        assumptions: &[i32],
    ) -> Result<SatOutcome, SatError>;
}

/// The embedded solver.
#[derive(Debug, Clone, Copy, Default)]
pub struct DpllSolver;

impl SatBackend for DpllSolver {
    fn solve(
        &mut self,
        num_vars: usize,
        clauses: &[Vec<i32>],
        assumptions: &[i32],
    ) -> Result<SatOutcome, SatError> {
        Ok(Search::new(num_vars, clauses).run(assumptions))
    }
}

const UNASSIGNED: i8 = 0;

fn code(lit: i32) -> usize {
    let var = (lit.unsigned_abs() as usize) - 1;
    var * 2 + usize::from(lit < 0)
}

struct Frame {
    lit: i32,
    trail_pos: usize,
    flipped: bool,
}

struct Search {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
    root_units: Vec<i32>,
    contradiction: bool,
    watches: Vec<Vec<usize>>,
    assign: Vec<i8>, // per var, 1 true, -1 false, 0 unassigned
    trail: Vec<i32>,
    prop_head: usize,
    frames: Vec<Frame>,
}

impl Search {
    fn new(num_vars: usize, clauses: &[Vec<i32>]) -> Self {
        let mut search = Search {
            num_vars,
            clauses: Vec::with_capacity(clauses.len()),
            root_units: Vec::new(),
            contradiction: false,
            watches: vec![Vec::new(); num_vars * 2],
            assign: vec![UNASSIGNED; num_vars],
            trail: Vec::new(),
            prop_head: 0,
            frames: Vec::new(),
        };
        'load: for clause in clauses {
            let mut lits: Vec<i32> = Vec::with_capacity(clause.len());
            for &lit in clause {
                debug_assert!(lit != 0 && lit.unsigned_abs() as usize <= num_vars);
                if lits.contains(&-lit) {
                    continue 'load; // tautology
                }
                if !lits.contains(&lit) {
                    lits.push(lit);
                }
            }
            match lits.len() {
                0 => search.contradiction = true,
                1 => search.root_units.push(lits[0]),
                _ => {
                    let index = search.clauses.len();
                    search.watches[code(lits[0])].push(index);
                    search.watches[code(lits[1])].push(index);
                    search.clauses.push(lits);
                }
            }
        }
        search
    }

    fn lit_value(&self, lit: i32) -> i8 {
        let v = self.assign[(lit.unsigned_abs() - 1) as usize];
        if lit > 0 {
            v
        } else {
            -v
        }
    }

    // false on conflict with an existing assignment
    fn enqueue(&mut self, lit: i32) -> bool {
        match self.lit_value(lit) {
            1 => true,
            -1 => false,
            _ => {
                self.assign[(lit.unsigned_abs() - 1) as usize] = if lit > 0 { 1 } else { -1 };
                self.trail.push(lit);
                true
            }
        }
    }

    // false on conflict
    fn propagate(&mut self) -> bool {
        while self.prop_head < self.trail.len() {
            let lit = self.trail[self.prop_head];
            self.prop_head += 1;
            let falsified = code(-lit);
            let mut i = 0;
            while i < self.watches[falsified].len() {
                let clause_index = self.watches[falsified][i];
                // Keep the falsified literal in slot 1.
                if self.clauses[clause_index][0] == -lit {
                    self.clauses[clause_index].swap(0, 1);
                }
                let other = self.clauses[clause_index][0];
                if self.lit_value(other) == 1 {
                    i += 1;
                    continue;
                }
                let replacement = (2..self.clauses[clause_index].len())
                    .find(|&k| self.lit_value(self.clauses[clause_index][k]) != -1);
                match replacement {
                    Some(k) => {
                        self.clauses[clause_index].swap(1, k);
                        let new_watch = code(self.clauses[clause_index][1]);
                        self.watches[falsified].swap_remove(i);
                        self.watches[new_watch].push(clause_index);
                    }
                    None => {
                        if !self.enqueue(other) {
                            return false;
                        }
                        i += 1;
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, pos: usize) {
        while self.trail.len() > pos {
            let lit = self.trail.pop().expect("trail is non-empty");
            self.assign[(lit.unsigned_abs() - 1) as usize] = UNASSIGNED;
        }
        self.prop_head = pos;
    }

    // Resolves a conflict by flipping the most recent unflipped decision.
    // false when the root level is reached (unsatisfiable).
    fn resolve_conflict(&mut self) -> bool {
        loop {
            let Some(frame) = self.frames.last_mut() else {
                return false;
            };
            if frame.flipped {
                let frame = self.frames.pop().expect("checked above");
                self.undo_to(frame.trail_pos);
            } else {
                frame.flipped = true;
                let (lit, pos) = (frame.lit, frame.trail_pos);
                self.undo_to(pos);
                let ok = self.enqueue(-lit);
                debug_assert!(ok, "flipped decision variable is unassigned");
                return true;
            }
        }
    }

    fn next_unassigned(&self) -> Option<i32> {
        self.assign
            .iter()
            .position(|&v| v == UNASSIGNED)
            .map(|i| (i + 1) as i32)
    }

    fn run(mut self, assumptions: &[i32]) -> SatOutcome {
        if self.contradiction {
            return SatOutcome::Unsatisfiable;
        }
        let units = std::mem::take(&mut self.root_units);
        for unit in units {
            if !self.enqueue(unit) {
                return SatOutcome::Unsatisfiable;
            }
        }
        for &assumption in assumptions {
            debug_assert!(assumption != 0 && assumption.unsigned_abs() as usize <= self.num_vars);
            if !self.enqueue(assumption) {
                return SatOutcome::Unsatisfiable;
            }
        }

        let mut conflict = !self.propagate();
        loop {
            if conflict {
                if !self.resolve_conflict() {
                    return SatOutcome::Unsatisfiable;
                }
                conflict = !self.propagate();
                continue;
            }
            match self.next_unassigned() {
                None => {
                    let values = self.assign.iter().map(|&v| v == 1).collect();
                    return SatOutcome::Satisfiable(Model::new(values));
                }
                Some(var) => {
                    // Negative polarity first: unconstrained variables end
                    // up false, keeping decoded witnesses minimal.
                    let decision = -var;
                    self.frames.push(Frame {
                        lit: decision,
                        trail_pos: self.trail.len(),
                        flipped: false,
                    });
                    let ok = self.enqueue(decision);
                    debug_assert!(ok);
                    conflict = !self.propagate();
                }
            }
        }
    }
}
