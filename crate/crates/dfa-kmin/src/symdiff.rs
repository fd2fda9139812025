use std::collections::VecDeque;

use dfa_core::product::Product;
use dfa_core::{Dfa, Ext};
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::KminError;

/// Which words of the symmetric difference to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// All of them; the difference must be finite.
    Auto,
    /// Words of length at most the given value.
    MaxLen(usize),
}

/// Size of `L(a) △ L(b)` (within the bound) and the longest counted word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symdiff {
    pub count: BigUint,
    pub max_error_len: Option<usize>,
    /// Whether the whole symmetric difference is finite.
    pub finite: bool,
}

/// Pairs from which a discrepancy is reachable, and a topological order of
/// them if they carry no cycle.
fn useful_order(prod: &Product) -> (Vec<bool>, Option<Vec<usize>>) {
    let n = prod.len();
    let k = prod.num_symbols();
    let mut preds = vec![Vec::new(); n];
    for i in 0..n {
        for s in 0..k {
            if let Some(j) = prod.succ(i, s) {
                preds[j].push(i);
            }
        }
    }
    let mut useful = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&i| prod.is_discrepancy(i)).collect();
    for &i in &stack {
        useful[i] = true;
    }
    while let Some(j) = stack.pop() {
        for &i in &preds[j] {
            if !useful[i] {
                useful[i] = true;
                stack.push(i);
            }
        }
    }
    let mut indeg = vec![0usize; n];
    for i in (0..n).filter(|&i| useful[i]) {
        for s in 0..k {
            if let Some(j) = prod.succ(i, s).filter(|&j| useful[j]) {
                indeg[j] += 1;
            }
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| useful[i] && indeg[i] == 0).collect();
    let mut order = Vec::new();
    while let Some(i) = queue.pop_front() {
        order.push(i);
        for s in 0..k {
            if let Some(j) = prod.succ(i, s).filter(|&j| useful[j]) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
    }
    let acyclic = order.len() == useful.iter().filter(|&&u| u).count();
    (useful, acyclic.then_some(order))
}

/// Counts the words in `L(a) △ L(b)` by dynamic programming over the
/// product automaton: path counts in topological order for [`Bound::Auto`],
/// length-indexed counts for [`Bound::MaxLen`].
pub fn count_symdiff(a: &Dfa, b: &Dfa, bound: Bound) -> Result<Symdiff, KminError> {
    let prod = Product::new(a, b);
    let (useful, order) = useful_order(&prod);
    let finite = order.is_some();
    let k = prod.num_symbols();
    match bound {
        Bound::Auto => {
            let order = order.ok_or(KminError::InfiniteDifference)?;
            let mut paths = vec![BigUint::zero(); prod.len()];
            let mut longest: Vec<Option<usize>> = vec![None; prod.len()];
            if useful[0] {
                paths[0] = BigUint::one();
                longest[0] = Some(0);
            }
            let mut count = BigUint::zero();
            let mut max_error_len = None;
            for &i in &order {
                if prod.is_discrepancy(i) {
                    count += &paths[i];
                    max_error_len = max_error_len.max(longest[i]);
                }
                let here = paths[i].clone();
                for s in 0..k {
                    if let Some(j) = prod.succ(i, s).filter(|&j| useful[j]) {
                        paths[j] += &here;
                        longest[j] = longest[j].max(longest[i].map(|l| l + 1));
                    }
                }
            }
            Ok(Symdiff { count, max_error_len, finite })
        }
        Bound::MaxLen(max_len) => {
            let mut layer = vec![BigUint::zero(); prod.len()];
            layer[0] = BigUint::one();
            let mut count = BigUint::zero();
            let mut max_error_len = None;
            for len in 0..=max_len {
                let mut hits = BigUint::zero();
                for i in (0..prod.len()).filter(|&i| prod.is_discrepancy(i)) {
                    hits += &layer[i];
                }
                if !hits.is_zero() {
                    count += hits;
                    max_error_len = Some(len);
                }
                if len == max_len {
                    break;
                }
                let mut next = vec![BigUint::zero(); prod.len()];
                for i in (0..prod.len()).filter(|&i| useful[i] && !layer[i].is_zero()) {
                    for s in 0..k {
                        if let Some(j) = prod.succ(i, s).filter(|&j| useful[j]) {
                            next[j] += &layer[i];
                        }
                    }
                }
                layer = next;
            }
            Ok(Symdiff { count, max_error_len, finite })
        }
    }
}

/// `d(L(a), L(b))`: one more than the longest word of the symmetric
/// difference, `0` for equal languages and `Inf` for an infinite difference.
pub fn similarity_bound(a: &Dfa, b: &Dfa) -> Ext {
    match count_symdiff(a, b, Bound::Auto) {
        Ok(s) => s.max_error_len.map_or(Ext::Fin(0), |l| Ext::Fin(l + 1)),
        Err(_) => Ext::Inf,
    }
}
