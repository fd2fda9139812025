//! Instances of the two reductions from graph 3-colouring: one for
//! error-bounded hyper-minimisation, one for error-bounded k-minimisation.
//!
//! Each family has a builder for the instance automaton, a builder for the
//! small automaton a proper colouring yields, and [`verify_hardness`], which
//! counts the errors between the two and checks them against the closed
//! forms.

mod gadget;
mod graph;
mod hyper;
mod kmin;
mod verify;

use dfa_core::Dfa;
use num_bigint::BigUint;

pub use gadget::{gadget_congruence, gadget_inlevel};
pub use graph::{parse_coloring, parse_graph, serialize_coloring, serialize_graph, Coloring, Graph};
pub use hyper::{build_hyper_colored, build_hyper_colored_unchecked, build_hyper_instance};
pub use kmin::{
    build_kmin_colored, build_kmin_colored_unchecked, build_kmin_instance, check_kmin_params, kmin_error_bounds,
};
pub use verify::{verify_hardness, Check, Report};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HardnessError {
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("vertex `{0}` has no incident edge")]
    IsolatedVertex(String),
    #[error("edge `{u} {v}` is monochromatic (colour {color})")]
    ImproperColoring { u: String, v: String, color: u8 },
    #[error("not a congruence: `{state}` and `{other}` part ways on `{symbol}`")]
    NotCongruence { state: String, other: String, symbol: String },
    #[error("{0}")]
    Constraint(String),
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Kmin(#[from] dfa_kmin::KminError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Hyper,
    /// `l = k - 2s`.
    Kmin {
        s: usize,
        k: usize,
        l: usize,
    },
}

/// Closed-form error counts; equal bounds for the hyper family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub min: BigUint,
    pub max: BigUint,
}

#[derive(Clone, Debug)]
pub struct HardnessInstance {
    pub dfa: Dfa,
    pub graph: Graph,
    pub family: Family,
    pub expected: Expected,
    /// Names of the states the gadgets added.
    pub gadget_states: Vec<String>,
}
