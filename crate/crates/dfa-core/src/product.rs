use std::collections::{HashMap, VecDeque};

use crate::{Dfa, StateId};

/// Reachable part of the synchronous product of two automata.
///
/// The alphabet is the union of both alphabets (first `a`'s symbols, then
/// `b`'s new ones). A component is `None` once its automaton has left its
/// transition function, which includes reading a symbol it does not know.
/// The pair `(None, None)` is never materialised.
#[derive(Clone, Debug)]
pub struct Product {
    pub alphabet: Vec<String>,
    pub pairs: Vec<(Option<StateId>, Option<StateId>)>,
    /// Row-major successor table over `alphabet`.
    pub delta: Vec<Option<usize>>,
    /// Parent pointer `(pair, symbol)` on a BFS tree from the start pair.
    pub parent: Vec<Option<(usize, usize)>>,
    accept: Vec<(bool, bool)>,
}

impl Product {
    pub fn new(a: &Dfa, b: &Dfa) -> Product {
        let mut alphabet: Vec<String> = a.alphabet().to_vec();
        for s in b.alphabet() {
            if a.symbol_id(s).is_none() {
                alphabet.push(s.clone());
            }
        }
        let in_a: Vec<Option<usize>> = alphabet.iter().map(|s| a.symbol_id(s)).collect();
        let in_b: Vec<Option<usize>> = alphabet.iter().map(|s| b.symbol_id(s)).collect();
        let k = alphabet.len();

        let start = (Some(a.start()), Some(b.start()));
        let mut index = HashMap::from([(start, 0usize)]);
        let mut pairs = vec![start];
        let mut parent = vec![None];
        let mut delta = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let (x, y) = pairs[i];
            let row_start = delta.len();
            delta.resize(row_start + k, None);
            for s in 0..k {
                let nx = x.zip(in_a[s]).and_then(|(x, c)| a.delta(x, c));
                let ny = y.zip(in_b[s]).and_then(|(y, c)| b.delta(y, c));
                if nx.is_none() && ny.is_none() {
                    continue;
                }
                let j = *index.entry((nx, ny)).or_insert_with(|| {
                    pairs.push((nx, ny));
                    parent.push(Some((i, s)));
                    queue.push_back(pairs.len() - 1);
                    pairs.len() - 1
                });
                delta[row_start + s] = Some(j);
            }
        }
        let accept = pairs
            .iter()
            .map(|&(x, y)| (x.is_some_and(|x| a.is_accepting(x)), y.is_some_and(|y| b.is_accepting(y))))
            .collect();
        Product { alphabet, pairs, delta, parent, accept }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn succ(&self, i: usize, s: usize) -> Option<usize> {
        self.delta[i * self.alphabet.len() + s]
    }

    /// Exactly one side accepts here.
    pub fn is_discrepancy(&self, i: usize) -> bool {
        let (x, y) = self.accept[i];
        x != y
    }

    /// Symbols spelling a shortest word that reaches pair `i`.
    pub fn word_to(&self, mut i: usize) -> Vec<String> {
        let mut word = Vec::new();
        while let Some((p, s)) = self.parent[i] {
            word.push(self.alphabet[s].clone());
            i = p;
        }
        word.reverse();
        word
    }
}
