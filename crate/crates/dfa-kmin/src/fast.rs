use dfa_core::{minimise, Dfa, Mode, StateId};
use dfa_distance::build_distance_forest;

use crate::values::compute_values;

/// Minimal automaton of `d`, keeping a sink when `d` is total.
pub fn minimal_form(d: &Dfa) -> Dfa {
    let mode = if d.is_total() { Mode::Total } else { Mode::Partial };
    minimise(d, mode)
}

/// Keeps the states with `target[q] == q` (in id order) and sends every
/// transition into a removed state `q` to `target[q]`.
pub(crate) fn quotient(d: &Dfa, target: &[StateId]) -> Dfa {
    let mut out = Dfa::new(d.alphabet().iter().cloned());
    let mut id = vec![usize::MAX; d.num_states()];
    for q in (0..d.num_states()).filter(|&q| target[q] == q) {
        id[q] = out.add_state(d.name(q));
        out.set_accepting(id[q], d.is_accepting(q));
    }
    for (q, a, p) in d.transitions() {
        if target[q] == q {
            out.set_delta(id[q], a, Some(id[target[p]]));
        }
    }
    out.set_start(id[target[d.start()]]);
    out
}

/// A `k`-minimal automaton `k`-similar to `d`: every state whose value is at
/// most `k` is merged into its `k`-ancestor in the distance forest.
pub fn k_minimise(d: &Dfa, k: usize) -> Dfa {
    let m = minimal_form(d);
    let forest = build_distance_forest(&m).expect("minimal automata satisfy the forest precondition");
    let values = compute_values(&m, &forest).expect("forest built from the same automaton");
    quotient(&m, &values.k_ancestors(&forest, k))
}

/// Smallest automaton whose language differs from `L(d)` on finitely many
/// words: `k`-minimisation at `k = 2n`, where every value is saturated.
pub fn hyper_minimise(d: &Dfa) -> Dfa {
    let m = minimal_form(d);
    k_minimise(&m, 2 * m.num_states())
}

#[cfg(test)]
mod tests {
    use super::*;
    use dfa_core::{equivalent, parse_dfa};

    #[test]
    fn zero_is_plain_minimisation() {
        let d = parse_dfa(
            "alphabet: a b\nstates: p q r\nstart: p\naccept: q r\n\
             trans: p a q\ntrans: p b r\ntrans: q a q\ntrans: r a r\n",
        )
        .unwrap();
        let z = k_minimise(&d, 0);
        assert_eq!(z.num_states(), 2);
        assert!(equivalent(&z, &d));
    }

    #[test]
    fn finite_preamble_collapses() {
        // a^5 only: every state merges away once k reaches the word length.
        let mut text = String::from("alphabet: a\nstates: q0 q1 q2 q3 q4 q5\nstart: q0\naccept: q5\n");
        for i in 0..5 {
            text += &format!("trans: q{i} a q{}\n", i + 1);
        }
        let d = parse_dfa(&text).unwrap();
        assert_eq!(k_minimise(&d, 0).num_states(), 6);
        assert_eq!(hyper_minimise(&d).num_states(), 1);
    }
}
