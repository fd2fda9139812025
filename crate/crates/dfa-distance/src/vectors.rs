//! Ultrametric trees over sparse vectors of tree positions.
//!
//! A vector assigns a vertex of a component tree to some symbols; missing
//! symbols point at the `⊥` leaf. The distance of two vectors is the largest
//! meeting level of their components. Vectors sharing an ancestor at a middle
//! level are grouped, the groups are solved below that level and their
//! ancestors above it.

use std::collections::BTreeMap;

use dfa_core::SymbolId;

use crate::tree::Tree;

/// Components `(symbol, vertex)` sorted by symbol. At level `h` each vertex is
/// the highest explicit vertex of level at most `h` on its path, and vertices
/// on the path of `⊥` are omitted.
pub(crate) type Sparse = Vec<(SymbolId, usize)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Node {
    Point(usize),
    Inner(usize),
}

#[derive(Clone, Debug, Default)]
pub(crate) struct DTree {
    pub level: Vec<usize>,
    pub children: Vec<Vec<Node>>,
}

pub(crate) struct VectorTree<'a> {
    tree: &'a Tree,
    bot: usize,
    pub out: DTree,
}

impl<'a> VectorTree<'a> {
    pub fn new(tree: &'a Tree, bot: usize) -> Self {
        VectorTree { tree, bot, out: DTree::default() }
    }

    fn bot_at(&self, h: usize) -> usize {
        self.tree.explicit_below(self.bot, h)
    }

    fn lift(&self, v: &Sparse, h: usize) -> Sparse {
        let b = self.bot_at(h);
        v.iter()
            .filter_map(|&(a, x)| {
                let y = self.tree.explicit_below(x, h);
                (y != b).then_some((a, y))
            })
            .collect()
    }

    fn dist(&self, u: &Sparse, v: &Sparse, h: usize) -> usize {
        let b = self.bot_at(h);
        let (mut i, mut j) = (0, 0);
        let mut best = h;
        while i < u.len() || j < v.len() {
            let (x, y) = match (u.get(i), v.get(j)) {
                (Some(&(a, x)), Some(&(c, y))) if a == c => {
                    i += 1;
                    j += 1;
                    (x, y)
                }
                (Some(&(a, x)), Some(&(c, _))) if a < c => {
                    i += 1;
                    (x, b)
                }
                (Some(&(_, x)), None) => {
                    i += 1;
                    (x, b)
                }
                (_, Some(&(_, y))) => {
                    j += 1;
                    (b, y)
                }
                (None, None) => unreachable!(),
            };
            if x != y {
                let m = self.tree.meet_level((x, h), (y, h)).expect("component tree is connected");
                best = best.max(m);
            }
        }
        best
    }

    fn node(&mut self, level: usize, children: Vec<Node>) -> Node {
        self.out.level.push(level);
        self.out.children.push(children);
        Node::Inner(self.out.level.len() - 1)
    }

    /// Builds the tree over `items`, whose vectors are canonical at `lo`,
    /// pairwise distinct there and pairwise at distance at most `hi`.
    pub fn build(&mut self, mut items: Vec<(Sparse, Node)>, lo: usize, hi: usize) -> Node {
        match items.len() {
            0 => panic!("no vectors to arrange"),
            1 => return items.pop().unwrap().1,
            2 => {
                let level = self.dist(&items[0].0, &items[1].0, lo);
                debug_assert!(lo < level && level <= hi);
                return self.node(level, vec![items[0].1, items[1].1]);
            }
            _ => {}
        }
        if hi - lo <= 1 {
            return self.node(hi, items.into_iter().map(|(_, n)| n).collect());
        }
        let mid = lo + (hi - lo) / 2;
        let mut groups: BTreeMap<Sparse, Vec<(Sparse, Node)>> = BTreeMap::new();
        for (v, n) in items {
            groups.entry(self.lift(&v, mid)).or_default().push((v, n));
        }
        if groups.len() == 1 {
            let (_, group) = groups.into_iter().next().unwrap();
            return self.build(group, lo, mid);
        }
        let upper = groups
            .into_iter()
            .map(|(key, group)| {
                let sub = self.build(group, lo, mid);
                (key, sub)
            })
            .collect();
        self.build(upper, mid, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force distances on the explicit component tree.
    #[test]
    fn matches_direct_distances() {
        // Component tree: root(4) -> {s3(3) -> {s2(2) -> {s1(1) -> {bot, p}, q}, r}, w}
        let mut t = Tree::default();
        let root = t.push(None, 4);
        let s3 = t.push(Some(root), 3);
        let s2 = t.push(Some(s3), 2);
        let s1 = t.push(Some(s2), 1);
        let bot = t.push(Some(s1), 0);
        let p = t.push(Some(s1), 0);
        let q = t.push(Some(s2), 0);
        let r = t.push(Some(s3), 0);
        let w = t.push(Some(root), 0);
        let vectors: Vec<Sparse> =
            vec![vec![(0, p)], vec![(0, q)], vec![(0, p), (1, r)], vec![(1, w)], vec![(0, q), (2, p)], vec![]];
        let mut vt = VectorTree::new(&t, bot);
        let items = vectors.iter().enumerate().map(|(i, v)| (v.clone(), Node::Point(i))).collect();
        let top = vt.build(items, 0, 4);

        // Recover pairwise levels from the output tree.
        let n = vectors.len();
        let mut lvl = vec![vec![0usize; n]; n];
        fn collect(out: &DTree, node: Node, acc: &mut Vec<usize>, lvl: &mut Vec<Vec<usize>>) {
            match node {
                Node::Point(i) => acc.push(i),
                Node::Inner(k) => {
                    let mut parts = Vec::new();
                    for &c in &out.children[k] {
                        let mut sub = Vec::new();
                        collect(out, c, &mut sub, lvl);
                        parts.push(sub);
                    }
                    for (x, a) in parts.iter().enumerate() {
                        for b in &parts[x + 1..] {
                            for &i in a {
                                for &j in b {
                                    lvl[i][j] = out.level[k];
                                    lvl[j][i] = out.level[k];
                                }
                            }
                        }
                    }
                    acc.extend(parts.into_iter().flatten());
                }
            }
        }
        let mut all = Vec::new();
        collect(&vt.out, top, &mut all, &mut lvl);
        all.sort();
        assert_eq!(all, (0..n).collect::<Vec<_>>());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert_eq!(lvl[i][j], vt.dist(&vectors[i], &vectors[j], 0), "{i} {j}");
                }
            }
        }
    }
}
