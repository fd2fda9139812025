//! Tries of coordinate vectors with label replacement.
//!
//! Every node keeps a linear dictionary (an ordered map) from labels to
//! children, and every label keeps the list of nodes whose dictionary may
//! mention it. Replacing a label moves its dictionary entries to the new
//! label, merging the two subtries when both exist. Leaves hold the items
//! whose vectors coincide.

use std::collections::BTreeMap;

#[derive(Clone, Debug, Default)]
struct TNode {
    dict: BTreeMap<usize, usize>,
    items: Vec<usize>,
    size: usize,
    alive: bool,
}

/// Explicit copy of every coordinate, kept to count how often each one is
/// rewritten.
#[derive(Clone, Debug, Default)]
pub(crate) struct Entries {
    current: Vec<Vec<usize>>,
    rewrites: Vec<Vec<usize>>,
    /// Coordinates `(item, index)` that currently hold a label.
    holders: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Tries {
    nodes: Vec<TNode>,
    roots: Vec<usize>,
    occ: Vec<Vec<usize>>,
    dirty: Vec<usize>,
    counter: Vec<usize>,
    entries: Entries,
}

impl Tries {
    /// `labels` is the size of the label space; counters start at zero.
    pub fn new(labels: usize, tries: usize) -> Tries {
        let mut t = Tries {
            nodes: Vec::new(),
            roots: Vec::new(),
            occ: vec![Vec::new(); labels],
            dirty: Vec::new(),
            counter: vec![0; labels],
            entries: Entries { holders: vec![Vec::new(); labels], ..Entries::default() },
        };
        for _ in 0..tries {
            let r = t.fresh();
            t.roots.push(r);
        }
        t
    }

    fn fresh(&mut self) -> usize {
        self.nodes.push(TNode { alive: true, ..TNode::default() });
        self.nodes.len() - 1
    }

    pub fn counter(&self, label: usize) -> usize {
        self.counter[label]
    }

    pub fn set_counter(&mut self, label: usize, value: usize) {
        self.counter[label] = value;
    }

    /// Inserts `item` with the given coordinates into trie `trie`.
    pub fn insert(&mut self, trie: usize, item: usize, coords: Vec<usize>) {
        let mut u = self.roots[trie];
        self.nodes[u].size += 1;
        for &label in &coords {
            u = match self.nodes[u].dict.get(&label) {
                Some(&c) => c,
                None => {
                    let c = self.fresh();
                    self.nodes[u].dict.insert(label, c);
                    self.occ[label].push(u);
                    c
                }
            };
            self.nodes[u].size += 1;
        }
        self.nodes[u].items.push(item);
        if self.nodes[u].items.len() == 2 {
            self.dirty.push(u);
        }
        if self.entries.current.len() <= item {
            self.entries.current.resize(item + 1, Vec::new());
            self.entries.rewrites.resize(item + 1, Vec::new());
        }
        for (i, &label) in coords.iter().enumerate() {
            self.entries.holders[label].push((item, i));
        }
        self.entries.rewrites[item] = vec![0; coords.len()];
        self.entries.current[item] = coords;
    }

    /// Leaves that gathered at least two items since the last call, as
    /// `(leaf, items)`.
    pub fn take_groups(&mut self) -> Vec<(usize, Vec<usize>)> {
        let mut dirty = std::mem::take(&mut self.dirty);
        dirty.sort_unstable();
        dirty.dedup();
        dirty
            .into_iter()
            .filter(|&u| self.nodes[u].alive && self.nodes[u].items.len() >= 2)
            .map(|u| (u, self.nodes[u].items.clone()))
            .collect()
    }

    /// Leaves only `item` in `leaf`.
    pub fn collapse(&mut self, leaf: usize, item: usize) {
        self.nodes[leaf].items = vec![item];
    }

    /// Representative of `labels` by the largest counter (ties to the
    /// smallest label).
    pub fn representative(&self, labels: &[usize]) -> usize {
        *labels.iter().max_by_key(|&&l| (self.counter[l], std::cmp::Reverse(l))).expect("non-empty label set")
    }

    /// Rewrites every occurrence of label `q` as `p`.
    pub fn replace(&mut self, q: usize, p: usize) {
        debug_assert_ne!(q, p);
        while !self.occ[q].is_empty() {
            for u in std::mem::take(&mut self.occ[q]) {
                if !self.nodes[u].alive {
                    continue;
                }
                let Some(cq) = self.nodes[u].dict.remove(&q) else { continue };
                match self.nodes[u].dict.get(&p) {
                    None => {
                        self.nodes[u].dict.insert(p, cq);
                        self.occ[p].push(u);
                    }
                    Some(&cp) => {
                        let kept = self.merge(cq, cp);
                        self.nodes[u].dict.insert(p, kept);
                    }
                }
            }
        }
        for (x, i) in std::mem::take(&mut self.entries.holders[q]) {
            if self.entries.current[x][i] == q {
                self.entries.current[x][i] = p;
                self.entries.rewrites[x][i] += 1;
                self.entries.holders[p].push((x, i));
            }
        }
    }

    /// Merges two subtries of equal depth; the smaller one is folded into
    /// the larger, which is returned.
    fn merge(&mut self, a: usize, b: usize) -> usize {
        let (keep, gone) = if self.nodes[a].size > self.nodes[b].size { (a, b) } else { (b, a) };
        self.nodes[gone].alive = false;
        for (label, child) in std::mem::take(&mut self.nodes[gone].dict) {
            match self.nodes[keep].dict.get(&label) {
                None => {
                    self.nodes[keep].dict.insert(label, child);
                    self.occ[label].push(keep);
                }
                Some(&other) => {
                    let kept = self.merge(child, other);
                    self.nodes[keep].dict.insert(label, kept);
                }
            }
        }
        let items = std::mem::take(&mut self.nodes[gone].items);
        if !items.is_empty() {
            self.nodes[keep].items.extend(items);
            if self.nodes[keep].items.len() >= 2 {
                self.dirty.push(keep);
            }
        }
        self.nodes[keep].size += self.nodes[gone].size;
        keep
    }

    /// Largest and total number of rewrites over all coordinates, and the
    /// number of coordinates.
    pub fn rewrite_counts(&self) -> (usize, usize, usize) {
        let all = self.entries.rewrites.iter().flatten();
        let max = all.clone().copied().max().unwrap_or(0);
        (max, all.clone().sum(), all.count())
    }
}
