use dfa_core::{state_meta, Dfa, StateId};

use crate::fast::{minimal_form, quotient};
use crate::similar::KSimilarity;

/// Pairwise merging: with `~k` computed once on the minimal automaton,
/// repeatedly take the first remaining similar pair (by ids) and merge the
/// state with the smaller in-level into the other. Equal in-levels merge the
/// higher id; a dead state is never merged away.
pub fn k_minimise_naive(d: &Dfa, k: usize) -> Dfa {
    let m = minimal_form(d);
    let n = m.num_states();
    let sim = KSimilarity::new(&m).expect("minimised automata are trimmed");
    let dead: Vec<bool> = state_meta(&m).expect("trimmed").m.iter().map(Option::is_none).collect();
    let key = |q: StateId| (sim.in_level(q), dead[q], std::cmp::Reverse(q));

    let mut into: Vec<StateId> = (0..n).collect();
    let mut alive = vec![true; n];
    'merge: loop {
        for q in (0..n).filter(|&q| alive[q]) {
            for p in (q + 1..n).filter(|&p| alive[p]) {
                if sim.similar(q, p, k) {
                    let (gone, kept) = if key(q) < key(p) { (q, p) } else { (p, q) };
                    alive[gone] = false;
                    into[gone] = kept;
                    continue 'merge;
                }
            }
        }
        break;
    }
    let target: Vec<StateId> = (0..n)
        .map(|mut q| {
            while into[q] != q {
                q = into[q];
            }
            q
        })
        .collect();
    quotient(&m, &target)
}
