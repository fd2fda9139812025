use std::collections::VecDeque;

use crate::product::Product;
use crate::{Dfa, DfaError, StateId};

/// States reachable from the start state.
pub fn reachable(d: &Dfa) -> Vec<bool> {
    let mut seen = vec![false; d.num_states()];
    seen[d.start()] = true;
    let mut queue = VecDeque::from([d.start()]);
    while let Some(q) = queue.pop_front() {
        for p in d.row(q).iter().flatten() {
            if !seen[*p] {
                seen[*p] = true;
                queue.push_back(*p);
            }
        }
    }
    seen
}

/// States from which some accepting state is reachable (non-empty right-language).
pub fn live(d: &Dfa) -> Vec<bool> {
    let n = d.num_states();
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (q, _, p) in d.transitions() {
        preds[p].push(q);
    }
    let mut seen: Vec<bool> = (0..n).map(|q| d.is_accepting(q)).collect();
    let mut queue: VecDeque<StateId> = d.accepting_states().collect();
    while let Some(p) = queue.pop_front() {
        for &q in &preds[p] {
            if !seen[q] {
                seen[q] = true;
                queue.push_back(q);
            }
        }
    }
    seen
}

/// Removes unreachable states and, with `drop_dead`, states whose
/// right-language is empty together with every transition into them.
/// The start state is always kept. State order is preserved.
pub fn trim(d: &Dfa, drop_dead: bool) -> Dfa {
    let reach = reachable(d);
    let alive = if drop_dead { live(d) } else { vec![true; d.num_states()] };
    let keep: Vec<StateId> = (0..d.num_states()).filter(|&q| q == d.start() || (reach[q] && alive[q])).collect();
    d.induced(&keep)
}

/// Merges `q` into `p`: transitions into `q` are redirected to `p`, `q` is
/// deleted, and `p` becomes the start state if `q` was. Ids above `q` shift
/// down by one.
pub fn merge_state(d: &Dfa, q: StateId, p: StateId) -> Result<Dfa, DfaError> {
    let n = d.num_states();
    if q >= n {
        return Err(DfaError::UnknownState(q));
    }
    if p >= n {
        return Err(DfaError::UnknownState(p));
    }
    if q == p {
        return Err(DfaError::SelfMerge(q));
    }
    let mut redirected = d.clone();
    for x in 0..n {
        for a in 0..d.num_symbols() {
            if d.delta(x, a) == Some(q) {
                redirected.set_delta(x, a, Some(p));
            }
        }
    }
    if d.start() == q {
        redirected.set_start(p);
    }
    let keep: Vec<StateId> = (0..n).filter(|&x| x != q).collect();
    Ok(redirected.induced(&keep))
}

/// Shortest word in `L(a) △ L(b)`, or `None` when the languages agree.
pub fn distinguishing_word(a: &Dfa, b: &Dfa) -> Option<Vec<String>> {
    let prod = Product::new(a, b);
    // BFS discovery order makes the first discrepancy a shortest one.
    (0..prod.len()).find(|&i| prod.is_discrepancy(i)).map(|i| prod.word_to(i))
}

pub fn equivalent(a: &Dfa, b: &Dfa) -> bool {
    distinguishing_word(a, b).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_dfa;

    fn dfa(text: &str) -> Dfa {
        parse_dfa(text).unwrap()
    }

    #[test]
    fn trim_drops_unreachable_accepting_state() {
        let d = dfa("alphabet: a\nstates: q0 q1 u\nstart: q0\naccept: q1 u\ntrans: q0 a q1\n");
        let t = trim(&d, false);
        assert_eq!(t.names(), ["q0", "q1"]);
        assert!(equivalent(&d, &t));
    }

    #[test]
    fn trim_drops_sink() {
        let d = dfa("alphabet: a b\nstates: q0 q1 bot\nstart: q0\naccept: q1\n\
             trans: q0 a q1\ntrans: q0 b bot\ntrans: q1 a bot\ntrans: q1 b bot\n\
             trans: bot a bot\ntrans: bot b bot\n");
        let t = trim(&d, true);
        assert_eq!(t.names(), ["q0", "q1"]);
        assert!(t.size() < d.size());
        assert!(equivalent(&d, &t));
    }

    #[test]
    fn merge_redirects_and_moves_start() {
        let d = dfa("alphabet: a\nstates: q0 q1 q2\nstart: q0\naccept: q2\ntrans: q0 a q1\ntrans: q1 a q2\n");
        let m = merge_state(&d, 0, 1).unwrap();
        assert_eq!(m.names(), ["q1", "q2"]);
        assert_eq!(m.name(m.start()), "q1");
        assert_eq!(merge_state(&d, 1, 1), Err(DfaError::SelfMerge(1)));
        assert_eq!(merge_state(&d, 7, 1), Err(DfaError::UnknownState(7)));
    }

    #[test]
    fn witness_for_a_versus_a_aa() {
        let one = dfa("alphabet: a\nstates: p0 p1\nstart: p0\naccept: p1\ntrans: p0 a p1\n");
        let two = dfa("alphabet: a\nstates: r0 r1 r2\nstart: r0\naccept: r1 r2\ntrans: r0 a r1\ntrans: r1 a r2\n");
        assert!(equivalent(&one, &one));
        assert_eq!(distinguishing_word(&one, &two), Some(vec!["a".to_string(), "a".to_string()]));
    }

    #[test]
    fn disjoint_symbols_are_undefined() {
        let x = dfa("alphabet: x\nstates: s t\nstart: s\naccept: t\ntrans: s x t\n");
        let y = dfa("alphabet: y\nstates: s t\nstart: s\naccept: t\ntrans: s y t\n");
        assert_eq!(distinguishing_word(&x, &y), Some(vec!["x".to_string()]));
    }
}
