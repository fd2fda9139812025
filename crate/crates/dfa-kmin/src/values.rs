use dfa_core::{state_meta, Dfa, Ext, StateId};
use dfa_distance::DistanceForest;

use crate::KminError;

/// Labels of the forest vertices and the derived merge horizons.
///
/// The label of a vertex is the leaf below it with the largest in-level
/// (then a dead state, then the lowest id). The submit node of a state is the
/// parent of the topmost vertex carrying its label; a state is merged away
/// for every `k >= values(q) = in-level(q) + level(submit node)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuesTable {
    /// Per forest vertex.
    pub label: Vec<StateId>,
    /// Per state; `None` when the state labels a root.
    pub submit: Vec<Option<usize>>,
    pub submit_depth: Vec<Ext>,
    pub values: Vec<Ext>,
    pub in_level: Vec<Ext>,
}

pub fn compute_values(d: &Dfa, f: &DistanceForest) -> Result<ValuesTable, KminError> {
    let n = d.num_states();
    if f.num_leaves() != n || f.num_states() != n {
        return Err(KminError::ForestMismatch { forest: f.num_leaves(), states: n });
    }
    let meta = state_meta(d)?;
    let key = |q: StateId| (meta.in_level[q], meta.m[q].is_none(), std::cmp::Reverse(q));

    // Vertices are numbered parents first, so a reverse scan is bottom-up.
    let nv = f.num_vertices();
    let mut label: Vec<Option<StateId>> = (0..nv).map(|v| f.state_at(v)).collect();
    for v in (0..nv).rev() {
        let l = label[v].expect("every vertex has a leaf below it");
        if let Some(p) = f.parent(v) {
            if label[p].is_none_or(|cur| key(l) > key(cur)) {
                label[p] = Some(l);
            }
        }
    }
    let label: Vec<StateId> = label.into_iter().map(Option::unwrap).collect();

    let mut submit = vec![None; n];
    for v in 0..nv {
        if let Some(p) = f.parent(v) {
            if label[p] != label[v] {
                submit[label[v]] = Some(p);
            }
        }
    }
    let submit_depth: Vec<Ext> = submit.iter().map(|s| s.map_or(Ext::Inf, |v| Ext::Fin(f.level(v)))).collect();
    let values = (0..n).map(|q| meta.in_level[q] + submit_depth[q]).collect();
    Ok(ValuesTable { label, submit, submit_depth, values, in_level: meta.in_level })
}

impl ValuesTable {
    /// Number of states with `values(q) > k`.
    pub fn size(&self, k: usize) -> usize {
        self.values.iter().filter(|&&v| v > Ext::Fin(k)).count()
    }

    /// For every state, the state it is merged into at horizon `k` (itself
    /// when it survives): the label of its nearest ancestor whose label has a
    /// value above `k`.
    pub fn k_ancestors(&self, f: &DistanceForest, k: usize) -> Vec<StateId> {
        let nv = f.num_vertices();
        let mut best = vec![usize::MAX; nv];
        for v in 0..nv {
            let l = self.label[v];
            best[v] = if self.values[l] > Ext::Fin(k) {
                l
            } else {
                best[f.parent(v).expect("root labels have infinite value")]
            };
        }
        (0..self.values.len()).map(|q| best[f.leaf(q).expect("state has a leaf")]).collect()
    }
}

/// `size(k)` for `k = 0..=2n` by counting sort over the finite values.
pub fn sizes_for_all_k(d: &Dfa) -> Vec<usize> {
    let m = crate::minimal_form(d);
    let forest = dfa_distance::build_distance_forest(&m).expect("minimal automata satisfy the forest precondition");
    let table = compute_values(&m, &forest).expect("forest built from the same automaton");
    sizes_from_values(&table.values)
}

pub(crate) fn sizes_from_values(values: &[Ext]) -> Vec<usize> {
    let n = values.len();
    let top = 2 * n;
    let mut at = vec![0usize; top + 1];
    for v in values.iter().filter_map(|v| v.finite()) {
        at[v.min(top)] += 1;
    }
    let mut merged = 0;
    (0..=top)
        .map(|k| {
            merged += at[k];
            n - merged
        })
        .collect()
}
