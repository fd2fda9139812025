//! Two gadgets that extend an automaton with fresh letters and states.
//!
//! The congruence gadget sends every state on a letter `t` into a ring of
//! states (one per class) cycled by `x`; only the last ring state accepts.
//! States of different classes then have infinitely many distinguishing
//! words, while languages over the old alphabet stay as they were.
//!
//! The level gadget adds a chain `d1, d2, …` read by `d` from the start
//! state, plus one letter `d_<state>` per targeted state, so that the state
//! can be entered by a word of the requested length.

use std::collections::BTreeMap;

use dfa_core::{Dfa, StateId};

use crate::HardnessError;

/// `base` itself, or `base` followed by primes until no existing name
/// matches.
pub(crate) fn fresh(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut name = base.to_string();
    while taken(&name) {
        name.push('\'');
    }
    name
}

/// Class index of every state; states outside `classes` are singletons.
/// Classes are numbered by their smallest member.
fn class_index(d: &Dfa, classes: &[Vec<StateId>]) -> Result<Vec<usize>, HardnessError> {
    let n = d.num_states();
    let mut tag = vec![usize::MAX; n];
    for (c, class) in classes.iter().enumerate() {
        for &q in class {
            if q >= n {
                return Err(HardnessError::Argument(format!("state {q} does not exist")));
            }
            if tag[q] != usize::MAX {
                return Err(HardnessError::Argument(format!("state `{}` lies in two classes", d.name(q))));
            }
            tag[q] = c;
        }
    }
    let mut renumber = BTreeMap::new();
    let mut singles = classes.len();
    let mut out = vec![0; n];
    for q in 0..n {
        let key = if tag[q] == usize::MAX {
            singles += 1;
            singles - 1
        } else {
            tag[q]
        };
        let next = renumber.len();
        out[q] = *renumber.entry(key).or_insert(next);
    }
    Ok(out)
}

/// Adds the ring gadget for the equivalence whose non-singleton classes are
/// listed in `classes`. The equivalence must be a congruence: for every
/// letter, related states move to related states, and an undefined
/// transition is only related to another undefined one.
///
/// Ring states are named `g1, …, gn` and the letters `t` and `x` (with
/// primes appended on a clash).
pub fn gadget_congruence(d: &Dfa, classes: &[Vec<StateId>]) -> Result<Dfa, HardnessError> {
    let class = class_index(d, classes)?;
    let n = d.num_states();
    let mut first: Vec<Option<StateId>> = vec![None; n];
    for q in 0..n {
        let rep = *first[class[q]].get_or_insert(q);
        for a in 0..d.num_symbols() {
            let here = d.delta(q, a).map(|p| class[p]);
            let there = d.delta(rep, a).map(|p| class[p]);
            if here != there {
                return Err(HardnessError::NotCongruence {
                    state: d.name(q).to_string(),
                    other: d.name(rep).to_string(),
                    symbol: d.symbol(a).to_string(),
                });
            }
        }
    }

    let count = class.iter().max().map_or(0, |m| m + 1);
    let mut out = d.clone();
    let t = out.add_symbol(fresh("t", |s| d.symbol_id(s).is_some()));
    let x = out.add_symbol(fresh("x", |s| out.symbol_id(s).is_some()));
    let ring: Vec<StateId> = (1..=count)
        .map(|i| {
            let name = fresh(&format!("g{i}"), |s| out.state_id(s).is_some());
            out.add_state(name)
        })
        .collect();
    for q in 0..n {
        out.set_delta(q, t, Some(ring[class[q]]));
    }
    for i in 0..count {
        out.set_delta(ring[i], x, Some(ring[(i + 1) % count]));
    }
    if let Some(&last) = ring.last() {
        out.set_accepting(last, true);
    }
    Ok(out)
}

/// Adds the level gadget: a `d`-chain of length `max(minlevel)` from the
/// start state and, for each state with `minlevel(s) >= 2`, a transition
/// on the letter `d_<s>` from chain state `minlevel(s) - 1` into `s`.
///
/// Chain states are named `d1, d2, …`.
pub fn gadget_inlevel(d: &Dfa, minlevel: &BTreeMap<StateId, usize>) -> Result<Dfa, HardnessError> {
    if let Some(&q) = minlevel.keys().find(|&&q| q >= d.num_states()) {
        return Err(HardnessError::Argument(format!("state {q} does not exist")));
    }
    if minlevel.contains_key(&d.start()) {
        return Err(HardnessError::Argument(format!(
            "the start state `{}` cannot have a minimum level",
            d.name(d.start())
        )));
    }
    let len = minlevel.values().copied().max().unwrap_or(0);
    let mut out = d.clone();
    let letter = out.add_symbol(fresh("d", |s| d.symbol_id(s).is_some()));
    let chain: Vec<StateId> = (1..=len)
        .map(|i| {
            let name = fresh(&format!("d{i}"), |s| out.state_id(s).is_some());
            out.add_state(name)
        })
        .collect();
    let mut prev = d.start();
    for &c in &chain {
        out.set_delta(prev, letter, Some(c));
        prev = c;
    }
    for (&s, &level) in minlevel {
        let entry = out.add_symbol(fresh(&format!("d_{}", d.name(s)), |x| out.symbol_id(x).is_some()));
        if level >= 2 {
            out.set_delta(chain[level - 2], entry, Some(s));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dfa_core::{parse_dfa, state_meta, Ext};

    fn host() -> Dfa {
        parse_dfa(
            "alphabet: a b\nstates: p q r\nstart: p\naccept: r\n\
             trans: p a q\ntrans: q a r\ntrans: r a r\ntrans: p b r\ntrans: q b r\ntrans: r b q\n",
        )
        .unwrap()
    }

    #[test]
    fn ring_follows_classes() {
        let d = host();
        // {q, r} is closed: both go to r on a and to {q, r} on b.
        let n = gadget_congruence(&d, &[vec![1, 2]]).unwrap();
        assert_eq!(n.num_states(), 5);
        assert_eq!(n.alphabet(), ["a", "b", "t", "x"]);
        let t = n.symbol_id("t").unwrap();
        assert_eq!(n.delta(1, t), n.delta(2, t));
        assert_ne!(n.delta(0, t), n.delta(1, t));
        assert!(n.is_accepting(n.state_id("g2").unwrap()));
    }

    #[test]
    fn non_congruence_has_witness() {
        let d = host();
        let err = gadget_congruence(&d, &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, HardnessError::NotCongruence { ref symbol, .. } if symbol == "a"));
    }

    #[test]
    fn fresh_names_get_primes() {
        let d = parse_dfa("alphabet: t x\nstates: g1 h\nstart: g1\naccept: h\ntrans: g1 t h\n").unwrap();
        let n = gadget_congruence(&d, &[]).unwrap();
        assert_eq!(n.alphabet(), ["t", "x", "t'", "x'"]);
        assert_eq!(n.names(), ["g1", "h", "g1'", "g2"]);
    }

    #[test]
    fn level_chain() {
        let d = host();
        let map = BTreeMap::from([(1, 5), (2, 1)]);
        let n = gadget_inlevel(&d, &map).unwrap();
        assert_eq!(n.num_states(), 3 + 5);
        let meta = state_meta(&n).unwrap();
        assert!(meta.in_level[1] >= Ext::Fin(5));
        for i in 1..=5 {
            assert_eq!(meta.in_level[n.state_id(&format!("d{i}")).unwrap()], Ext::Fin(i));
        }
        // minlevel 1 needs no entry.
        let r_entry = n.symbol_id("d_r").unwrap();
        assert!((0..n.num_states()).all(|s| n.delta(s, r_entry).is_none()));
        assert!(gadget_inlevel(&d, &BTreeMap::from([(0, 2)])).is_err());
    }
}
