//! Rooted forest grown top-down with binary-lifting ancestor lists.

#[derive(Clone, Debug, Default)]
pub(crate) struct Tree {
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    depth: Vec<usize>,
    /// `up[v][j]` is the `2^j`-th ancestor of `v`.
    up: Vec<Vec<usize>>,
}

impl Tree {
    /// Adds a vertex below an existing `parent` (or a new root).
    pub fn push(&mut self, parent: Option<usize>, level: usize) -> usize {
        let v = self.parent.len();
        let mut up = Vec::new();
        let depth = match parent {
            Some(p) => {
                debug_assert!(self.level[p] > level, "levels must increase towards the root");
                up.push(p);
                while let Some(&a) = self.up[up[up.len() - 1]].get(up.len() - 1) {
                    up.push(a);
                }
                self.depth[p] + 1
            }
            None => 0,
        };
        self.parent.push(parent);
        self.level.push(level);
        self.depth.push(depth);
        self.up.push(up);
        v
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    /// Highest ancestor-or-self of `v` whose level is at most `h`.
    /// Together with `h` it names the (possibly implicit) ancestor at level `h`.
    pub fn explicit_below(&self, mut v: usize, h: usize) -> usize {
        debug_assert!(self.level[v] <= h);
        for j in (0..self.up[v].len()).rev() {
            if let Some(&a) = self.up[v].get(j) {
                if self.level[a] <= h {
                    v = a;
                }
            }
        }
        v
    }

    fn lift(&self, mut v: usize, mut steps: usize) -> usize {
        let mut j = 0;
        while steps > 0 {
            if steps & 1 == 1 {
                v = self.up[v][j];
            }
            steps >>= 1;
            j += 1;
        }
        v
    }

    /// Lowest common ancestor, or `None` for vertices in different trees.
    pub fn lca(&self, x: usize, y: usize) -> Option<usize> {
        let (mut x, mut y) = (x, y);
        if self.depth[x] < self.depth[y] {
            std::mem::swap(&mut x, &mut y);
        }
        x = self.lift(x, self.depth[x] - self.depth[y]);
        if x == y {
            return Some(x);
        }
        // Ancestor lists shrink as x and y climb, so index defensively.
        for j in (0..self.up[x].len()).rev() {
            if let (Some(&a), Some(&b)) = (self.up[x].get(j), self.up[y].get(j)) {
                if a != b {
                    x = a;
                    y = b;
                }
            }
        }
        match (self.parent[x], self.parent[y]) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    /// Level where the implicit vertices `(x, hx)` and `(y, hy)` meet.
    pub fn meet_level(&self, (x, hx): (usize, usize), (y, hy): (usize, usize)) -> Option<usize> {
        self.lca(x, y).map(|z| self.level[z].max(hx).max(hy))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifting_queries() {
        // root(5) -> a(3) -> {x(0), y(0)}, root -> z(0)
        let mut t = Tree::default();
        let root = t.push(None, 5);
        let a = t.push(Some(root), 3);
        let x = t.push(Some(a), 0);
        let y = t.push(Some(a), 0);
        let z = t.push(Some(root), 0);
        let other = t.push(None, 0);
        assert_eq!(t.lca(x, y), Some(a));
        assert_eq!(t.lca(x, z), Some(root));
        assert_eq!(t.lca(x, other), None);
        assert_eq!(t.explicit_below(x, 2), x);
        assert_eq!(t.explicit_below(x, 4), a);
        assert_eq!(t.explicit_below(x, 9), root);
        assert_eq!(t.meet_level((x, 1), (y, 2)), Some(3));
        assert_eq!(t.meet_level((a, 4), (a, 4)), Some(4));
    }
    #[test]
    fn lca_across_trees_of_equal_depth() {
        let mut t = Tree::default();
        let mut leaves = Vec::new();
        for _ in 0..2 {
            let r = t.push(None, 9);
            let m = t.push(Some(r), 5);
            leaves.push(t.push(Some(m), 0));
        }
        assert_eq!(t.lca(leaves[0], leaves[1]), None);
    }
}
