use std::collections::VecDeque;

use crate::ops::{live, reachable};
use crate::{Dfa, DfaError, Ext, StateId, SymbolId};

/// Derived per-state facts of a trimmed automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateMeta {
    /// Length of the longest word leading to the state; `Inf` when the state
    /// can be reached through a cycle.
    pub in_level: Vec<Ext>,
    /// Length of the longest accepted word from the state; `Inf` for an
    /// infinite right-language and `None` for an empty one.
    pub m: Vec<Option<Ext>>,
    /// Symbols whose successor has an infinite right-language, ascending.
    pub signature: Vec<Vec<SymbolId>>,
}

impl StateMeta {
    pub fn is_kernel(&self, q: StateId) -> bool {
        self.in_level[q] == Ext::Inf
    }

    pub fn has_finite_language(&self, q: StateId) -> bool {
        !matches!(self.m[q], Some(Ext::Inf))
    }
}

/// In-levels, longest-word bounds and signatures.
///
/// Fails with [`DfaError::Untrimmed`] if some state is unreachable, since the
/// in-level of such a state is not defined.
pub fn state_meta(d: &Dfa) -> Result<StateMeta, DfaError> {
    let n = d.num_states();
    if let Some(q) = reachable(d).iter().position(|r| !r) {
        return Err(DfaError::Untrimmed(d.name(q).to_string()));
    }

    // Longest paths from the start in topological order; whatever Kahn's
    // algorithm cannot reach lies on or behind a cycle.
    let mut indeg = vec![0usize; n];
    for (_, _, p) in d.transitions() {
        indeg[p] += 1;
    }
    let mut level = vec![0usize; n];
    let mut done = vec![false; n];
    let mut queue = VecDeque::new();
    if indeg[d.start()] == 0 {
        queue.push_back(d.start());
    }
    while let Some(q) = queue.pop_front() {
        done[q] = true;
        for p in d.row(q).iter().flatten() {
            level[*p] = level[*p].max(level[q] + 1);
            indeg[*p] -= 1;
            if indeg[*p] == 0 {
                queue.push_back(*p);
            }
        }
    }
    let in_level = (0..n).map(|q| if done[q] { Ext::Fin(level[q]) } else { Ext::Inf }).collect();

    // Longest accepted words by reverse topological order on live states.
    let alive = live(d);
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
    let mut outdeg = vec![0usize; n];
    for (q, _, p) in d.transitions() {
        if alive[q] && alive[p] {
            preds[p].push(q);
            outdeg[q] += 1;
        }
    }
    let mut longest: Vec<Option<usize>> = (0..n).map(|q| d.is_accepting(q).then_some(0)).collect();
    let mut finished = vec![false; n];
    let mut queue: VecDeque<StateId> = (0..n).filter(|&q| alive[q] && outdeg[q] == 0).collect();
    while let Some(p) = queue.pop_front() {
        finished[p] = true;
        let mp = longest[p].expect("finished live state has an accepted word");
        for &q in &preds[p] {
            longest[q] = Some(longest[q].map_or(mp + 1, |v| v.max(mp + 1)));
            outdeg[q] -= 1;
            if outdeg[q] == 0 {
                queue.push_back(q);
            }
        }
    }
    let m: Vec<Option<Ext>> = (0..n)
        .map(|q| match (alive[q], finished[q]) {
            (false, _) => None,
            (true, true) => longest[q].map(Ext::Fin),
            (true, false) => Some(Ext::Inf),
        })
        .collect();

    let signature = (0..n)
        .map(|q| (0..d.num_symbols()).filter(|&a| d.delta(q, a).is_some_and(|p| m[p] == Some(Ext::Inf))).collect())
        .collect();
    Ok(StateMeta { in_level, m, signature })
}
