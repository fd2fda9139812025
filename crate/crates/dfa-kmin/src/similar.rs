use dfa_core::{state_meta, Dfa, Ext, StateId};
use dfa_distance::{distance_table, DistanceTable};

use crate::KminError;

/// Distances and in-levels of one automaton, for repeated similarity tests.
#[derive(Clone, Debug)]
pub struct KSimilarity {
    table: DistanceTable,
    in_level: Vec<Ext>,
}

impl KSimilarity {
    /// Fails when some state is unreachable.
    pub fn new(d: &Dfa) -> Result<KSimilarity, KminError> {
        let meta = state_meta(d)?;
        Ok(KSimilarity { table: distance_table(d), in_level: meta.in_level })
    }

    pub fn distance(&self, q: StateId, p: StateId) -> Ext {
        self.table.get(q, p)
    }

    pub fn in_level(&self, q: StateId) -> Ext {
        self.in_level[q]
    }

    /// `d(q, p) + min(k, in-level(q), in-level(p)) <= k`.
    pub fn similar(&self, q: StateId, p: StateId, k: usize) -> bool {
        let weight = Ext::Fin(k).min(self.in_level[q]).min(self.in_level[p]);
        self.table.get(q, p) + weight <= Ext::Fin(k)
    }
}

pub fn k_similar(d: &Dfa, q: StateId, p: StateId, k: usize) -> Result<bool, KminError> {
    Ok(KSimilarity::new(d)?.similar(q, p, k))
}
