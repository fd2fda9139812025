// Partition refinement in the style of Hopcroft, adapted to partial
// transition functions: every initial block is queued on every symbol, and
// after that only the smaller half of a split is queued unless the parent
// block was still pending. Splitting uses a refinable-partition layout where
// each block is a contiguous range of `elems` and marked states are swapped
// to the front of their block.

use std::collections::VecDeque;

use crate::ops::{live, trim};
use crate::{Dfa, StateId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// No dead state; the fewest states among partial automata.
    #[default]
    Partial,
    /// Complete transition function; the fewest states among total automata.
    Total,
}

/// Myhill–Nerode classes of the states of `d` (reachable or not).
#[derive(Clone, Debug)]
pub struct Classes {
    pub class_of: Vec<usize>,
    pub count: usize,
    /// Class holding the states with an empty right-language, if any.
    pub dead: Option<usize>,
}

struct Partition {
    elems: Vec<StateId>,
    loc: Vec<usize>,
    block_of: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    marked: Vec<usize>,
}

impl Partition {
    fn new(groups: &[Vec<StateId>], n: usize) -> Partition {
        let mut p = Partition {
            elems: Vec::new(),
            loc: vec![usize::MAX; n],
            block_of: vec![usize::MAX; n],
            start: Vec::new(),
            end: Vec::new(),
            marked: Vec::new(),
        };
        for g in groups.iter().filter(|g| !g.is_empty()) {
            let b = p.start.len();
            p.start.push(p.elems.len());
            for &q in g {
                p.loc[q] = p.elems.len();
                p.block_of[q] = b;
                p.elems.push(q);
            }
            p.end.push(p.elems.len());
            p.marked.push(0);
        }
        p
    }

    fn blocks(&self) -> usize {
        self.start.len()
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.start[b]
    }

    /// Returns true the first time a block is touched in this round.
    fn mark(&mut self, q: StateId) -> bool {
        let b = self.block_of[q];
        let boundary = self.start[b] + self.marked[b];
        let i = self.loc[q];
        if i < boundary {
            return false;
        }
        let other = self.elems[boundary];
        self.elems.swap(i, boundary);
        self.loc[other] = i;
        self.loc[q] = boundary;
        self.marked[b] += 1;
        self.marked[b] == 1
    }

    /// Splits off the marked prefix of `b` as a new block, if proper.
    fn split(&mut self, b: usize) -> Option<usize> {
        let m = std::mem::take(&mut self.marked[b]);
        if m == self.size(b) {
            return None;
        }
        let nb = self.blocks();
        let s = self.start[b];
        self.start.push(s);
        self.end.push(s + m);
        self.marked.push(0);
        self.start[b] = s + m;
        for i in s..s + m {
            self.block_of[self.elems[i]] = nb;
        }
        Some(nb)
    }
}

fn refine(d: &Dfa, states: &[StateId], usable: &[bool]) -> Partition {
    let n = d.num_states();
    let k = d.num_symbols();
    let (acc, rej): (Vec<StateId>, Vec<StateId>) = states.iter().partition(|&&q| d.is_accepting(q));
    let mut part = Partition::new(&[acc, rej], n);

    // preds[a][p] lists sources q with δ(q, a) = p among usable states.
    let mut preds: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); n]; k];
    for &q in states {
        for (a, t) in d.row(q).iter().enumerate() {
            if let Some(p) = *t {
                if usable[p] {
                    preds[a][p].push(q);
                }
            }
        }
    }

    let mut pending = vec![vec![true; k]; part.blocks()];
    let mut work: VecDeque<(usize, usize)> = (0..part.blocks()).flat_map(|b| (0..k).map(move |a| (b, a))).collect();
    let mut sources = Vec::new();
    let mut touched = Vec::new();
    while let Some((b, a)) = work.pop_front() {
        pending[b][a] = false;
        sources.clear();
        for i in part.start[b]..part.end[b] {
            sources.extend_from_slice(&preds[a][part.elems[i]]);
        }
        for &q in &sources {
            if part.mark(q) {
                touched.push(part.block_of[q]);
            }
        }
        for x in touched.drain(..) {
            let Some(y) = part.split(x) else { continue };
            pending.push(vec![false; k]);
            for c in 0..k {
                let target = if pending[x][c] || part.size(y) <= part.size(x) { y } else { x };
                if !pending[target][c] {
                    pending[target][c] = true;
                    work.push_back((target, c));
                }
                if pending[x][c] && !pending[y][c] {
                    pending[y][c] = true;
                    work.push_back((y, c));
                }
            }
        }
    }
    part
}

/// Language-equivalence classes of all states of `d`.
///
/// Transitions into dead states are treated as undefined, so a dead state and
/// a missing transition are interchangeable.
pub fn equivalence_classes(d: &Dfa) -> Classes {
    let alive = live(d);
    let states: Vec<StateId> = (0..d.num_states()).filter(|&q| alive[q]).collect();
    let part = refine(d, &states, &alive);
    let mut class_of = vec![usize::MAX; d.num_states()];
    for &q in &states {
        class_of[q] = part.block_of[q];
    }
    let mut count = part.blocks();
    let mut dead = None;
    if states.len() < d.num_states() {
        dead = Some(count);
        count += 1;
        for c in class_of.iter_mut().filter(|c| **c == usize::MAX) {
            *c = count - 1;
        }
    }
    Classes { class_of, count, dead }
}

fn fresh_name(d: &Dfa, base: &str) -> String {
    let mut name = base.to_string();
    while d.state_id(&name).is_some() {
        name.push('\'');
    }
    name
}

/// The minimal automaton for `L(d)` under `mode`.
///
/// Output states are numbered by breadth-first search from the start state
/// in symbol order. Each state keeps the name of its lowest-id member; a
/// fresh sink is called `bot` unless the input already had a dead state.
pub fn minimise(d: &Dfa, mode: Mode) -> Dfa {
    let t = trim(d, false);
    let cls = equivalence_classes(&t);
    let mut rep = vec![usize::MAX; cls.count];
    for q in (0..t.num_states()).rev() {
        rep[cls.class_of[q]] = q;
    }
    let is_dead = |c: usize| Some(c) == cls.dead;
    let class_succ = |c: usize, a: usize| t.delta(rep[c], a).map(|p| cls.class_of[p]).filter(|&c2| !is_dead(c2));

    let k = t.num_symbols();
    let start_class = cls.class_of[t.start()];
    let mut out = Dfa::new(t.alphabet().iter().cloned());
    let mut id = vec![usize::MAX; cls.count];
    let mut order = Vec::new();
    if is_dead(start_class) {
        let q = out.add_state(t.name(rep[start_class]));
        if mode == Mode::Total {
            for a in 0..k {
                out.set_delta(q, a, Some(q));
            }
        }
        return out;
    }
    id[start_class] = out.add_state(t.name(rep[start_class]));
    order.push(start_class);
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        i += 1;
        for a in 0..k {
            if let Some(c2) = class_succ(c, a) {
                if id[c2] == usize::MAX {
                    id[c2] = out.add_state(t.name(rep[c2]));
                    order.push(c2);
                }
            }
        }
    }
    for &c in &order {
        out.set_accepting(id[c], t.is_accepting(rep[c]));
        for a in 0..k {
            out.set_delta(id[c], a, class_succ(c, a).map(|c2| id[c2]));
        }
    }
    if mode == Mode::Total && !out.is_total() {
        let name = match cls.dead {
            Some(c) => t.name(rep[c]).to_string(),
            None => fresh_name(&t, "bot"),
        };
        let sink = out.add_state(name);
        for q in 0..out.num_states() {
            for a in 0..k {
                if out.delta(q, a).is_none() {
                    out.set_delta(q, a, Some(sink));
                }
            }
        }
    }
    out
}

/// True when no two states of `d` are equivalent and, in partial mode, no
/// state is dead, or in total mode `d` is complete. Unreachable states make
/// the automaton non-minimal.
pub fn is_minimal(d: &Dfa, mode: Mode) -> bool {
    if crate::ops::reachable(d).iter().any(|r| !r) {
        return false;
    }
    let cls = equivalence_classes(d);
    if cls.count != d.num_states() {
        return false;
    }
    match mode {
        Mode::Partial => cls.dead.is_none() || d.num_states() == 1,
        Mode::Total => d.is_total(),
    }
}
