//! Deterministic finite automata with partial transition functions.
//!
//! Provides the [`Dfa`] model, a line-oriented text format, trimming,
//! state merging, partition-refinement minimisation and per-state metadata
//! (in-levels, longest accepted word lengths and signatures).

mod dfa;
mod dot;
mod error;
mod ext;
mod meta;
mod minimise;
mod ops;
pub mod product;
mod text;

pub use dfa::{Dfa, StateId, SymbolId};
pub use dot::{quote as dot_quote, to_dot};
pub use error::DfaError;
pub use ext::Ext;
pub use meta::{state_meta, StateMeta};
pub use minimise::{equivalence_classes, is_minimal, minimise, Classes, Mode};
pub use ops::{distinguishing_word, equivalent, live, merge_state, reachable, trim};
pub use text::{parse_dfa, serialize_dfa};
