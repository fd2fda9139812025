//! Gadget contracts checked against brute-force enumeration on random
//! hosts. Shared with the acceptance target.

use std::collections::BTreeMap;

use dfa_core::{trim, Dfa, Ext, Mode, StateId};
use dfa_hardness::{gadget_congruence, gadget_inlevel};
use dfa_oracle::gen::{random_minimal, Shape};
use dfa_oracle::{bf_distance, bf_in_level, bf_language_from, bf_symdiff, DEFAULT_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LEN: usize = 5;

/// Words of length at most `LEN` that lead from the start to `q`.
fn left_words(d: &Dfa, q: StateId) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut layer: Vec<(Vec<String>, StateId)> = vec![(Vec::new(), d.start())];
    for _ in 0..=LEN {
        let mut next = Vec::new();
        for (w, p) in &layer {
            if *p == q {
                out.push(w.clone());
            }
            for a in 0..d.num_symbols() {
                if let Some(r) = d.delta(*p, a) {
                    let mut w = w.clone();
                    w.push(d.symbol(a).to_string());
                    next.push((w, r));
                }
            }
        }
        layer = next;
    }
    out.sort();
    out
}

fn over(words: Vec<Vec<String>>, host: &Dfa) -> Vec<Vec<String>> {
    words.into_iter().filter(|w| w.iter().all(|a| host.symbol_id(a).is_some())).collect()
}

/// Classes of `d(q, p) <= h`, which is a congruence on a total automaton.
fn distance_classes(d: &Dfa, h: usize) -> Vec<Vec<StateId>> {
    let mut classes: Vec<Vec<StateId>> = Vec::new();
    for q in 0..d.num_states() {
        match classes.iter_mut().find(|c| bf_distance(d, c[0], q) <= Ext::Fin(h)) {
            Some(c) => c.push(q),
            None => classes.push(vec![q]),
        }
    }
    classes
}

fn check_congruence_gadget(m: &Dfa, h: usize) -> Result<(), String> {
    let classes = distance_classes(m, h);
    let n = gadget_congruence(m, &classes).map_err(|e| e.to_string())?;
    let class_of = |q: StateId| classes.iter().position(|c| c.contains(&q)).unwrap();
    for q in 0..m.num_states() {
        let lm = bf_language_from(m, q, LEN, DEFAULT_BUDGET).unwrap().words;
        let ln = over(bf_language_from(&n, q, LEN, DEFAULT_BUDGET).unwrap().words, m);
        if lm != ln {
            return Err(format!("right-language of `{}` changed", m.name(q)));
        }
        if left_words(m, q) != left_words(&n, q) {
            return Err(format!("left-language of `{}` changed", m.name(q)));
        }
    }
    for q in 0..n.num_states() {
        for p in q + 1..n.num_states() {
            let dn = bf_distance(&n, q, p);
            let new = p >= m.num_states();
            if new || class_of(q) != class_of(p) {
                if dn != Ext::Inf {
                    return Err(format!("`{}` and `{}` are hyper-equivalent", n.name(q), n.name(p)));
                }
            } else {
                let sm = bf_symdiff(&m.with_start(q), &m.with_start(p), LEN, DEFAULT_BUDGET).unwrap();
                let sn = bf_symdiff(&n.with_start(q), &n.with_start(p), LEN, DEFAULT_BUDGET).unwrap();
                if sm.words != sn.words {
                    return Err(format!("difference of `{}` and `{}` changed", n.name(q), n.name(p)));
                }
            }
        }
    }
    Ok(())
}

/// `m` with a fresh start state copying the old start's row, so the start
/// has no incoming transitions; the old start goes if nothing else reaches it.
fn detached_start(m: &Dfa) -> Dfa {
    let mut d = Dfa::new(m.alphabet().iter().cloned());
    for q in 0..m.num_states() {
        let p = d.add_state(m.name(q));
        d.set_accepting(p, m.is_accepting(q));
    }
    let s = d.add_state("s0");
    d.set_accepting(s, m.is_accepting(m.start()));
    for q in 0..m.num_states() {
        for a in 0..m.num_symbols() {
            d.set_delta(q, a, m.delta(q, a));
        }
    }
    for a in 0..m.num_symbols() {
        d.set_delta(s, a, m.delta(m.start(), a));
    }
    d.set_start(s);
    trim(&d, false)
}

fn incoming(d: &Dfa, q: StateId) -> Vec<(StateId, String)> {
    d.transitions().filter(|&(_, _, p)| p == q).map(|(r, a, _)| (r, d.symbol(a).to_string())).collect()
}

fn check_inlevel_gadget(m: &Dfa, minlevel: &BTreeMap<StateId, usize>) -> Result<(), String> {
    let n = gadget_inlevel(m, minlevel).map_err(|e| e.to_string())?;
    for q in (0..m.num_states()).filter(|&q| q != m.start()) {
        let lm = bf_language_from(m, q, LEN, DEFAULT_BUDGET).unwrap().words;
        let ln = bf_language_from(&n, q, LEN, DEFAULT_BUDGET).unwrap().words;
        if lm != ln {
            return Err(format!("right-language of `{}` changed", m.name(q)));
        }
        let before = incoming(m, q);
        let after = incoming(&n, q);
        let gained = after.iter().filter(|t| !before.contains(t)).count();
        let lost = before.iter().filter(|t| !after.contains(t)).count();
        let want = usize::from(minlevel.get(&q).is_some_and(|&l| l >= 2));
        if gained != want || lost != 0 {
            return Err(format!("`{}` gained {gained} and lost {lost} incoming transitions", m.name(q)));
        }
        if let Some(&l) = minlevel.get(&q) {
            match bf_in_level(&n, q) {
                Some(level) if level >= Ext::Fin(l) => {}
                other => return Err(format!("in-level of `{}` is {other:?}, wanted {l}", m.name(q))),
            }
        }
    }
    for i in m.num_states()..n.num_states() {
        if incoming(&n, i).len() != 1 {
            return Err(format!("chain state `{}` has {} predecessors", n.name(i), incoming(&n, i).len()));
        }
    }
    Ok(())
}

/// Runs both gadgets on `hosts` random hosts; returns the number of
/// gadget applications checked.
pub fn check_gadget_contracts(seed: u64, hosts: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut applications = 0;
    for _ in 0..hosts {
        let states = rng.gen_range(2..=5);
        let symbols = rng.gen_range(1..=2);
        let m = random_minimal(&mut rng, Shape::new(states, symbols).total(), Mode::Total);
        for h in [0, rng.gen_range(1..=m.num_states()), usize::MAX / 2] {
            check_congruence_gadget(&m, h)?;
            applications += 1;
        }
        let host = detached_start(&m);
        let mut minlevel = BTreeMap::new();
        for q in (0..host.num_states()).filter(|&q| q != host.start()) {
            if rng.gen_bool(0.6) {
                minlevel.insert(q, rng.gen_range(0..=6));
            }
        }
        check_inlevel_gadget(&host, &minlevel)?;
        applications += 1;
    }
    Ok(applications)
}
