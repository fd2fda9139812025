//! k-similarity and k-minimisation.
//!
//! Two states are `k`-similar when their distance plus the smaller of `k`
//! and their in-levels is at most `k`; merging `k`-similar states the right
//! way round yields an automaton that errs only on words shorter than `k`.
//! [`k_minimise_naive`] merges pair by pair, [`k_minimise`] reads all merges
//! off a distance forest, and [`Sweep`] walks every `k` from `0` to `2n`
//! maintaining one automaton.

mod fast;
mod naive;
mod similar;
mod sweep;
mod symdiff;
mod values;

pub use fast::{hyper_minimise, k_minimise, minimal_form};
pub use naive::k_minimise_naive;
pub use similar::{k_similar, KSimilarity};
pub use sweep::{all_k_sweep, Sweep};
pub use symdiff::{count_symdiff, similarity_bound, Bound, Symdiff};
pub use values::{compute_values, sizes_for_all_k, ValuesTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KminError {
    #[error(transparent)]
    Dfa(#[from] dfa_core::DfaError),
    #[error(transparent)]
    Distance(#[from] dfa_distance::DistanceError),
    #[error("forest has {forest} leaves but the automaton has {states} states")]
    ForestMismatch { forest: usize, states: usize },
    #[error("the symmetric difference is infinite")]
    InfiniteDifference,
}
