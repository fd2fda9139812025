//! Seeded random automata for randomised tests.

use dfa_core::{minimise, trim, Dfa, Mode};
use rand::Rng;

/// Shape of a random automaton.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub states: usize,
    pub symbols: usize,
    /// Probability that a transition is defined.
    pub density: f64,
    /// Probability that a state accepts.
    pub accept: f64,
}

impl Shape {
    pub fn new(states: usize, symbols: usize) -> Shape {
        Shape { states, symbols, density: 0.8, accept: 0.4 }
    }

    pub fn total(self) -> Shape {
        Shape { density: 1.0, ..self }
    }
}

fn skeleton(shape: Shape) -> Dfa {
    let mut d = Dfa::new((0..shape.symbols).map(|i| ((b'a' + i as u8) as char).to_string()));
    for q in 0..shape.states {
        d.add_state(format!("q{q}"));
    }
    d
}

/// States `q0..`, start `q0`, each transition present with probability
/// `density` and pointing anywhere.
pub fn random_dfa<R: Rng>(rng: &mut R, shape: Shape) -> Dfa {
    assert!(shape.states > 0, "at least one state");
    let mut d = skeleton(shape);
    for q in 0..shape.states {
        d.set_accepting(q, rng.gen_bool(shape.accept));
        for a in 0..shape.symbols {
            if rng.gen_bool(shape.density) {
                d.set_delta(q, a, Some(rng.gen_range(0..shape.states)));
            }
        }
    }
    d
}

/// Like [`random_dfa`] but transitions only move to higher-numbered states,
/// so every right-language is finite.
pub fn random_acyclic<R: Rng>(rng: &mut R, shape: Shape) -> Dfa {
    let mut d = skeleton(shape);
    for q in 0..shape.states {
        d.set_accepting(q, rng.gen_bool(shape.accept));
        for a in 0..shape.symbols {
            if q + 1 < shape.states && rng.gen_bool(shape.density) {
                d.set_delta(q, a, Some(rng.gen_range(q + 1..shape.states)));
            }
        }
    }
    d
}

/// Random automaton reduced to its reachable part.
pub fn random_trimmed<R: Rng>(rng: &mut R, shape: Shape) -> Dfa {
    trim(&random_dfa(rng, shape), false)
}

/// Minimal automaton of a random language, in the given mode.
pub fn random_minimal<R: Rng>(rng: &mut R, shape: Shape, mode: Mode) -> Dfa {
    minimise(&random_dfa(rng, shape), mode)
}
