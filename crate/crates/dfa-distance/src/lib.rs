//! State distances and distance forests.
//!
//! The distance of two right-languages is the least length from which on
//! they agree. [`distance_table`] computes all pairwise distances directly;
//! [`build_distance_forest`] encodes them as lowest-common-ancestor levels of
//! a weighted forest, and [`acyclic_distance_tree`] does the same for
//! automata whose languages are finite.

mod acyclic;
mod build;
mod forest;
mod table;
mod tree;
mod trie;
mod vectors;

pub use build::{acyclic_distance_tree, build_distance_forest, build_distance_forest_instrumented, RewriteStats};
pub use forest::{forest_lca_level, DistanceForest, BOTTOM_NAME};
pub use table::{distance_table, DistanceTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistanceError {
    #[error("automaton is not minimal: states {0} and {1} are equivalent")]
    NotMinimal(String, String),
    #[error("state {0} is unreachable")]
    Unreachable(String),
    #[error("state {0} has an infinite right-language")]
    InfiniteLanguage(String),
    #[error("unknown state {0}")]
    UnknownState(usize),
}
