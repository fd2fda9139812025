use dfa_core::{Dfa, Ext, StateId};
use dfa_distance::build_distance_forest;

use crate::fast::minimal_form;
use crate::values::compute_values;

#[derive(Clone, Copy, Debug)]
struct Record {
    source: StateId,
    symbol: usize,
    slot: usize,
    live: bool,
}

/// One automaton evolved through `k = 0, 1, ..., 2n`.
///
/// Phase `k` holds a `k`-minimal automaton. Moving to the next phase merges
/// the states whose value equals the new `k`. Incoming transitions are kept
/// in slots; a merge moves the shorter incoming list into the longer one and
/// hands the surviving slot to the kept state, so each transition is moved
/// only when the list it belongs to at least doubles.
#[derive(Clone, Debug)]
pub struct Sweep {
    base: Dfa,
    by_value: Vec<Vec<StateId>>,
    /// Label of the submit node (the state itself for root labels).
    up: Vec<StateId>,
    into: Vec<StateId>,
    alive: Vec<bool>,
    slot_of: Vec<usize>,
    owner: Vec<StateId>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    records: Vec<Record>,
    start_slot: usize,
    k: usize,
    moves: usize,
}

pub fn all_k_sweep(d: &Dfa) -> Sweep {
    Sweep::new(d)
}

impl Sweep {
    pub fn new(d: &Dfa) -> Sweep {
        let base = minimal_form(d);
        let n = base.num_states();
        let forest = build_distance_forest(&base).expect("minimal automata satisfy the forest precondition");
        let table = compute_values(&base, &forest).expect("forest built from the same automaton");
        let mut by_value = vec![Vec::new(); 2 * n + 1];
        for (q, v) in table.values.iter().enumerate() {
            if let Ext::Fin(v) = *v {
                by_value[v.min(2 * n)].push(q);
            }
        }
        let up = (0..n).map(|q| table.submit[q].map_or(q, |v| table.label[v])).collect();
        let mut records = Vec::new();
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        for (q, a, p) in base.transitions() {
            incoming[p].push(records.len());
            outgoing[q].push(records.len());
            records.push(Record { source: q, symbol: a, slot: p, live: true });
        }
        let mut sweep = Sweep {
            by_value,
            up,
            into: (0..n).collect(),
            alive: vec![true; n],
            slot_of: (0..n).collect(),
            owner: (0..n).collect(),
            incoming,
            outgoing,
            records,
            start_slot: base.start(),
            k: 0,
            moves: 0,
            base,
        };
        sweep.apply(0);
        sweep
    }

    /// Current horizon.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest horizon, `2n` for the minimal input.
    pub fn last_k(&self) -> usize {
        self.by_value.len() - 1
    }

    pub fn num_states(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    /// Transitions moved between incoming lists so far.
    pub fn moves(&self) -> usize {
        self.moves
    }

    /// Moves to `k + 1`; `false` once the last horizon is reached.
    pub fn advance(&mut self) -> bool {
        if self.k == self.last_k() {
            return false;
        }
        self.k += 1;
        self.apply(self.k);
        true
    }

    fn resolve(&self, mut q: StateId) -> StateId {
        while !self.alive[q] {
            q = self.into[q];
        }
        q
    }

    fn apply(&mut self, k: usize) {
        for q in std::mem::take(&mut self.by_value[k]) {
            let t = self.resolve(self.up[q]);
            debug_assert_ne!(t, q);
            self.merge(q, t);
        }
    }

    fn merge(&mut self, q: StateId, t: StateId) {
        self.alive[q] = false;
        self.into[q] = t;
        for &r in &self.outgoing[q] {
            self.records[r].live = false;
        }
        let (sq, st) = (self.slot_of[q], self.slot_of[t]);
        let (big, small) = if self.incoming[sq].len() > self.incoming[st].len() { (sq, st) } else { (st, sq) };
        for r in std::mem::take(&mut self.incoming[small]) {
            if self.records[r].live {
                self.records[r].slot = big;
                self.incoming[big].push(r);
                self.moves += 1;
            }
        }
        self.owner[big] = t;
        self.slot_of[t] = big;
        if self.start_slot == small {
            self.start_slot = big;
        }
    }

    /// The automaton of the current phase.
    pub fn snapshot(&self) -> Dfa {
        let mut out = Dfa::new(self.base.alphabet().iter().cloned());
        let mut id = vec![usize::MAX; self.alive.len()];
        for q in (0..self.alive.len()).filter(|&q| self.alive[q]) {
            id[q] = out.add_state(self.base.name(q));
            out.set_accepting(id[q], self.base.is_accepting(q));
        }
        for q in (0..self.alive.len()).filter(|&q| self.alive[q]) {
            for &r in &self.outgoing[q] {
                let rec = self.records[r];
                debug_assert_eq!(rec.source, q);
                out.set_delta(id[q], rec.symbol, Some(id[self.owner[rec.slot]]));
            }
        }
        out.set_start(id[self.owner[self.start_slot]]);
        out
    }
}

impl Iterator for Sweep {
    type Item = (usize, Dfa);

    /// Yields the current phase, then advances; the first item is phase 0.
    fn next(&mut self) -> Option<(usize, Dfa)> {
        if self.k > self.last_k() {
            return None;
        }
        let item = (self.k, self.snapshot());
        if !self.advance() {
            self.k = self.last_k() + 1;
        }
        Some(item)
    }
}
