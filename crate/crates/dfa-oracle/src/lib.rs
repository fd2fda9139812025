//! Brute-force reference implementations.
//!
//! The oracles share no code with the fast algorithms beyond the [`Dfa`]
//! type itself; only the input generators in [`gen`] call into the core.
//! Word enumeration refuses to run past an explicit budget rather than
//! truncating. Distances and in-levels are computed from
//! length-indexed sets of reachable states over a window long enough to
//! pump every cycle, so they are exact without relying on any bound from
//! the theory being tested.

pub mod gen;

use std::collections::BTreeSet;

use dfa_core::{Dfa, Ext, StateId};
use thiserror::Error;

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration needs {needed} words but the budget is {budget}")]
    Budget { needed: usize, budget: usize },
}

/// Words sorted by length, then lexicographically by symbol name.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordList {
    pub words: Vec<Vec<String>>,
    pub max_len: usize,
}

impl WordList {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    fn sort(&mut self) {
        self.words.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    }
}

fn word_count(symbols: usize, max_len: usize, budget: usize) -> Result<usize, OracleError> {
    let mut total: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        if total > budget {
            return Err(OracleError::Budget { needed: total, budget });
        }
        layer = layer.saturating_mul(symbols);
    }
    Ok(total)
}

/// Every word over `symbols` up to `max_len`, shortest first.
fn all_words(symbols: &[String], max_len: usize, budget: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    word_count(symbols.len(), max_len, budget)?;
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..symbols.len() {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

fn union_alphabet(a: &Dfa, b: &Dfa) -> Vec<String> {
    let set: BTreeSet<&String> = a.alphabet().iter().chain(b.alphabet()).collect();
    set.into_iter().cloned().collect()
}

fn accepts_named(d: &Dfa, from: StateId, word: &[&str]) -> bool {
    let mut q = from;
    for s in word {
        match d.symbol_id(s).and_then(|a| d.delta(q, a)) {
            Some(p) => q = p,
            None => return false,
        }
    }
    d.is_accepting(q)
}

/// `L(q) ∩ Σ^{≤max_len}` for the right-language of `q`.
pub fn bf_language_from(d: &Dfa, q: StateId, max_len: usize, budget: usize) -> Result<WordList, OracleError> {
    let mut list = WordList { words: Vec::new(), max_len };
    for w in all_words(d.alphabet(), max_len, budget)? {
        let named: Vec<&str> = w.iter().map(|&a| d.symbol(a)).collect();
        if accepts_named(d, q, &named) {
            list.words.push(named.into_iter().map(String::from).collect());
        }
    }
    list.sort();
    Ok(list)
}

/// `L(d) ∩ Σ^{≤max_len}` by exhaustive enumeration.
pub fn bf_language(d: &Dfa, max_len: usize, budget: usize) -> Result<WordList, OracleError> {
    bf_language_from(d, d.start(), max_len, budget)
}

/// `(L(a) △ L(b)) ∩ Δ^{≤max_len}` over the union alphabet `Δ`.
pub fn bf_symdiff(a: &Dfa, b: &Dfa, max_len: usize, budget: usize) -> Result<WordList, OracleError> {
    let symbols = union_alphabet(a, b);
    let mut list = WordList { words: Vec::new(), max_len };
    for w in all_words(&symbols, max_len, budget)? {
        let named: Vec<&str> = w.iter().map(|&i| symbols[i].as_str()).collect();
        if accepts_named(a, a.start(), &named) != accepts_named(b, b.start(), &named) {
            list.words.push(named.into_iter().map(String::from).collect());
        }
    }
    list.sort();
    Ok(list)
}

type Pair = (Option<StateId>, Option<StateId>);

/// Lengths `ℓ ≤ horizon` at which some word of length `ℓ` leads from the
/// pair `(x, y)` to a pair where exactly one side accepts.
fn discrepancy_lengths(a: &Dfa, x: StateId, b: &Dfa, y: StateId, horizon: usize) -> Vec<usize> {
    let symbols = union_alphabet(a, b);
    let ids: Vec<(Option<usize>, Option<usize>)> = symbols.iter().map(|s| (a.symbol_id(s), b.symbol_id(s))).collect();
    let acc = |(p, q): Pair| p.is_some_and(|p| a.is_accepting(p)) != q.is_some_and(|q| b.is_accepting(q));
    let mut layer: BTreeSet<Pair> = BTreeSet::from([(Some(x), Some(y))]);
    let mut out = Vec::new();
    for len in 0..=horizon {
        if layer.iter().any(|&p| acc(p)) {
            out.push(len);
        }
        let mut next = BTreeSet::new();
        for &(p, q) in &layer {
            for &(ia, ib) in &ids {
                let np = p.zip(ia).and_then(|(p, c)| a.delta(p, c));
                let nq = q.zip(ib).and_then(|(q, c)| b.delta(q, c));
                if np.is_some() || nq.is_some() {
                    next.insert((np, nq));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    out
}

/// `d(L_a(x), L_b(y)) = min{ℓ : the languages agree on Σ^{≥ℓ}}`.
///
/// Any discrepancy path longer than the number of pairs `P` repeats a pair,
/// so it can be pumped both up and down. Scanning lengths up to `2P`
/// therefore decides whether discrepancies are unbounded.
fn pair_distance(a: &Dfa, x: StateId, b: &Dfa, y: StateId) -> Ext {
    let pairs = (a.num_states() + 1) * (b.num_states() + 1);
    let lens = discrepancy_lengths(a, x, b, y, 2 * pairs);
    match lens.last() {
        None => Ext::Fin(0),
        Some(&l) if l >= pairs => Ext::Inf,
        Some(&l) => Ext::Fin(l + 1),
    }
}

/// Distance between the right-languages of two states of `d`.
pub fn bf_distance(d: &Dfa, q: StateId, p: StateId) -> Ext {
    pair_distance(d, q, d, p)
}

/// Distance between the right-language of `q` and the empty language.
pub fn bf_distance_to_empty(d: &Dfa, q: StateId) -> Ext {
    let mut empty = Dfa::new(d.alphabet().iter().cloned());
    empty.add_state("empty");
    pair_distance(d, q, &empty, 0)
}

/// `d(L(a), L(b))`, the least `k` such that `a` and `b` are `k`-similar.
pub fn bf_similarity_bound(a: &Dfa, b: &Dfa) -> Ext {
    pair_distance(a, a.start(), b, b.start())
}

/// True iff no word with length in `[k, k + P]` lies in `L(a) △ L(b)`,
/// where `P` bounds the number of product pairs. Longer discrepancies can
/// be shortened into this window by removing cycles.
pub fn window_k_similar(a: &Dfa, b: &Dfa, k: usize) -> bool {
    let pairs = (a.num_states() + 1) * (b.num_states() + 1);
    discrepancy_lengths(a, a.start(), b, b.start(), k + pairs).iter().all(|&l| l < k)
}

/// Length of the longest word reaching `q` from the start, `Inf` if
/// unbounded; `None` if `q` is unreachable.
pub fn bf_in_level(d: &Dfa, q: StateId) -> Option<Ext> {
    let n = d.num_states();
    let mut layer = BTreeSet::from([d.start()]);
    let mut last = None;
    for len in 0..=2 * n {
        if layer.contains(&q) {
            last = Some(len);
        }
        layer = layer.iter().flat_map(|&s| d.row(s).iter().flatten().copied()).collect();
        if layer.is_empty() {
            break;
        }
    }
    // A word of length at least n visits some state twice, so its cycle can be pumped.
    last.map(|l| if l >= n { Ext::Inf } else { Ext::Fin(l) })
}

/// Definitional `k`-similarity of two states of one automaton.
pub fn bf_k_similar(d: &Dfa, q: StateId, p: StateId, k: usize) -> bool {
    let il = |s| bf_in_level(d, s).expect("state must be reachable");
    let weight = Ext::Fin(k).min(il(q)).min(il(p));
    bf_distance(d, q, p) + weight <= Ext::Fin(k)
}

/// A maximal set of pairwise `k`-dissimilar states, chosen greedily in the
/// given order.
pub fn greedy_max_dissimilar_in_order(d: &Dfa, k: usize, order: &[StateId]) -> Vec<StateId> {
    let mut chosen: Vec<StateId> = Vec::new();
    for &q in order {
        if chosen.iter().all(|&p| !bf_k_similar(d, q, p, k)) {
            chosen.push(q);
        }
    }
    chosen
}

pub fn greedy_max_dissimilar(d: &Dfa, k: usize) -> Vec<StateId> {
    let order: Vec<StateId> = (0..d.num_states()).collect();
    greedy_max_dissimilar_in_order(d, k, &order)
}

/// Number of Myhill–Nerode classes of `L(d)` with a non-empty residual.
///
/// Reachable states are compared on their acceptance of every word of
/// length below `n`, which separates all inequivalent states.
pub fn bf_class_count(d: &Dfa, budget: usize) -> Result<usize, OracleError> {
    let n = d.num_states();
    let words = all_words(d.alphabet(), n, budget)?;
    let reach: BTreeSet<StateId> = {
        let mut seen = BTreeSet::from([d.start()]);
        let mut stack = vec![d.start()];
        while let Some(q) = stack.pop() {
            for p in d.row(q).iter().flatten() {
                if seen.insert(*p) {
                    stack.push(*p);
                }
            }
        }
        seen
    };
    let mut residuals = BTreeSet::new();
    for q in reach {
        let bits: Vec<bool> = words.iter().map(|w| d.run_from(q, w).is_some_and(|p| d.is_accepting(p))).collect();
        if bits.iter().any(|&b| b) {
            residuals.insert(bits);
        }
    }
    Ok(residuals.len())
}
