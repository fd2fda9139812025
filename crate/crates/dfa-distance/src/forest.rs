use std::fmt::Write;

use dfa_core::{dot_quote, Ext, StateId};

use crate::tree::Tree;
use crate::DistanceError;

/// Name given to the virtual empty-language leaf.
pub const BOTTOM_NAME: &str = "⊥";

/// Weighted forest whose leaves are states; the level of the lowest common
/// ancestor of two leaves is their distance, and leaves in different trees
/// are at infinite distance.
///
/// Leaves are indexed by state id. When [`DistanceForest::bottom`] is set,
/// one extra leaf with index `num_states()` stands for the empty language.
#[derive(Clone, Debug)]
pub struct DistanceForest {
    tree: Tree,
    leaf_of: Vec<usize>,
    state_at: Vec<Option<usize>>,
    names: Vec<String>,
    states: usize,
}

impl DistanceForest {
    /// Number of automaton states (the virtual `⊥` leaf excluded).
    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn num_leaves(&self) -> usize {
        self.leaf_of.len()
    }

    /// Index of the virtual `⊥` leaf, if materialised.
    pub fn bottom(&self) -> Option<usize> {
        (self.leaf_of.len() > self.states).then_some(self.states)
    }

    pub fn num_vertices(&self) -> usize {
        self.tree.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.tree.parent(v)
    }

    pub fn level(&self, v: usize) -> usize {
        self.tree.level(v)
    }

    /// Weight of the edge to the parent; `None` at roots.
    pub fn edge_weight(&self, v: usize) -> Option<usize> {
        self.parent(v).map(|p| self.level(p) - self.level(v))
    }

    pub fn leaf(&self, q: usize) -> Result<usize, DistanceError> {
        self.leaf_of.get(q).copied().ok_or(DistanceError::UnknownState(q))
    }

    /// Leaf index stored at vertex `v`.
    pub fn state_at(&self, v: usize) -> Option<usize> {
        self.state_at[v]
    }

    pub fn leaf_name(&self, q: usize) -> &str {
        &self.names[q]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.tree.len()).filter(|&v| self.tree.parent(v).is_none())
    }

    pub fn num_trees(&self) -> usize {
        self.roots().count()
    }

    /// Root of the tree containing vertex `v`.
    pub fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.tree.parent(v) {
            v = p;
        }
        v
    }

    /// Level of the lowest common ancestor of two leaves; `Inf` across trees.
    pub fn lca_level(&self, q: usize, p: usize) -> Result<Ext, DistanceError> {
        let (x, y) = (self.leaf(q)?, self.leaf(p)?);
        Ok(match self.tree.lca(x, y) {
            Some(z) => Ext::Fin(self.tree.level(z)),
            None => Ext::Inf,
        })
    }

    /// Lowest common ancestor vertex of two leaves.
    pub fn lca(&self, q: usize, p: usize) -> Result<Option<usize>, DistanceError> {
        Ok(self.tree.lca(self.leaf(q)?, self.leaf(p)?))
    }

    /// One line per vertex: `id parent edge_weight level [name]`, with `-`
    /// for the missing parent and weight of a root.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for v in 0..self.tree.len() {
            let parent = self.parent(v).map_or("-".to_string(), |p| p.to_string());
            let weight = self.edge_weight(v).map_or("-".to_string(), |w| w.to_string());
            write!(out, "{v} {parent} {weight} {}", self.level(v)).unwrap();
            if let Some(q) = self.state_at[v] {
                write!(out, " {}", self.names[q]).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph forest {\n  rankdir=BT;\n");
        for v in 0..self.tree.len() {
            match self.state_at[v] {
                Some(q) => writeln!(out, "  v{v} [shape=box,label={}];", dot_quote(&self.names[q])),
                None => writeln!(out, "  v{v} [shape=circle,label=\"{}\"];", self.level(v)),
            }
            .unwrap();
        }
        for v in 0..self.tree.len() {
            if let (Some(p), Some(w)) = (self.parent(v), self.edge_weight(v)) {
                writeln!(out, "  v{v} -> v{p} [label=\"{w}\"];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Free-function form of [`DistanceForest::lca_level`].
pub fn forest_lca_level(f: &DistanceForest, q: StateId, p: StateId) -> Result<Ext, DistanceError> {
    f.lca_level(q, p)
}

/// Forest assembled bottom-up before its final layout is fixed.
#[derive(Clone, Debug, Default)]
pub(crate) struct Draft {
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    leaf: Vec<Option<usize>>,
}

impl Draft {
    pub fn add(&mut self, level: usize, leaf: Option<usize>) -> usize {
        self.parent.push(None);
        self.level.push(level);
        self.leaf.push(leaf);
        self.parent.len() - 1
    }

    pub fn set_parent(&mut self, child: usize, parent: usize) {
        debug_assert!(self.level[parent] > self.level[child]);
        self.parent[child] = Some(parent);
    }

    /// Copies `tree`, labelling vertex `v` with `leaf(v)`; returns the offset
    /// of the copied ids.
    pub fn absorb(&mut self, tree: &Tree, leaf: impl Fn(usize) -> Option<usize>) -> usize {
        let base = self.parent.len();
        for v in 0..tree.len() {
            self.add(tree.level(v), leaf(v));
        }
        for v in 0..tree.len() {
            if let Some(p) = tree.parent(v) {
                self.set_parent(base + v, base + p);
            }
        }
        base
    }

    /// Lays the forest out top-down. Leaf `drop` is removed together with
    /// internal vertices left without leaves; unary internal vertices are
    /// spliced out when `splice` is set.
    pub fn finish(self, names: Vec<String>, states: usize, drop: Option<usize>, splice: bool) -> DistanceForest {
        let n = self.parent.len();
        let mut children = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for v in 0..n {
            match self.parent[v] {
                Some(p) => children[p].push(v),
                None => roots.push(v),
            }
        }
        // Pre-order, then fill `useful` in reverse.
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = roots.iter().rev().copied().collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(children[v].iter().rev());
        }
        let mut useful = vec![false; n];
        for &v in order.iter().rev() {
            useful[v] = match self.leaf[v] {
                Some(q) => Some(q) != drop,
                None => children[v].iter().any(|&c| useful[c]),
            };
        }

        let num_leaves = names.len();
        let mut tree = Tree::default();
        let mut state_at = Vec::new();
        let mut leaf_of = vec![usize::MAX; num_leaves];
        let mut stack: Vec<(usize, Option<usize>)> =
            roots.iter().rev().filter(|&&r| useful[r]).map(|&r| (r, None)).collect();
        while let Some((v, parent)) = stack.pop() {
            let kids: Vec<usize> = children[v].iter().copied().filter(|&c| useful[c]).collect();
            if splice && self.leaf[v].is_none() && kids.len() == 1 {
                stack.push((kids[0], parent));
                continue;
            }
            let id = tree.push(parent, self.level[v]);
            state_at.push(self.leaf[v]);
            if let Some(q) = self.leaf[v] {
                leaf_of[q] = id;
            }
            stack.extend(kids.iter().rev().map(|&c| (c, Some(id))));
        }
        debug_assert!(leaf_of.iter().all(|&v| v != usize::MAX), "every leaf is placed");
        DistanceForest { tree, leaf_of, state_at, names, states }
    }
}
