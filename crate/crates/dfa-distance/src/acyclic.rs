use std::collections::BTreeMap;

use dfa_core::{Dfa, Ext, StateId};

use crate::tree::Tree;
use crate::vectors::{Node, Sparse, VectorTree};

/// Distance tree over the states with a finite right-language plus `⊥`.
pub(crate) struct Acyclic {
    pub tree: Tree,
    /// Vertex of each state (index `n` is the virtual `⊥`).
    pub leaf: Vec<Option<usize>>,
    pub bot: usize,
}

/// `m` holds the longest accepted word length per state; only states with a
/// finite value are placed. `bottom` is an explicit empty-language state that
/// takes the place of the virtual `⊥`.
pub(crate) fn build_acyclic(d: &Dfa, m: &[Option<Ext>], bottom: Option<StateId>) -> Acyclic {
    let n = d.num_states();
    let mut by_level: Vec<Vec<StateId>> = Vec::new();
    for (q, mq) in m.iter().enumerate() {
        if let Some(Ext::Fin(t)) = *mq {
            if by_level.len() <= t {
                by_level.resize(t + 1, Vec::new());
            }
            by_level[t].push(q);
        }
    }

    // Spine from the root at level M+1 down to the `⊥` leaf.
    let mut tree = Tree::default();
    let mut spine = vec![0; by_level.len() + 1];
    let mut parent = None;
    for j in (1..=by_level.len()).rev() {
        spine[j] = tree.push(parent, j);
        parent = Some(spine[j]);
    }
    let bot = tree.push(parent, 0);
    spine[0] = bot;
    let mut leaf = vec![None; n + 1];
    leaf[bottom.unwrap_or(n)] = Some(bot);

    for (t, states) in by_level.iter().enumerate() {
        let mut points: BTreeMap<Sparse, Vec<StateId>> = BTreeMap::new();
        for &q in states {
            let v: Sparse = d
                .row(q)
                .iter()
                .enumerate()
                .filter_map(|(a, p)| {
                    p.filter(|&p| Some(p) != bottom)
                        .map(|p| (a, leaf[p].expect("successor has a smaller longest word")))
                })
                .collect();
            points.entry(v).or_default().push(q);
        }
        let groups: Vec<Vec<StateId>> = points.values().cloned().collect();
        let items = points.into_keys().enumerate().map(|(i, v)| (v, Node::Point(i))).collect();
        let mut vt = VectorTree::new(&tree, bot);
        let root = vt.build(items, 0, t);
        let out = vt.out;

        // Fragment levels are shifted by one; a root at level t+1 is the
        // spine vertex itself.
        let top = spine[t + 1];
        let mut stack = match root {
            Node::Inner(k) if out.level[k] + 1 == t + 1 => out.children[k].iter().map(|&c| (c, top)).collect(),
            _ => vec![(root, top)],
        };
        while let Some((node, parent)) = stack.pop() {
            match node {
                Node::Inner(k) => {
                    let v = tree.push(Some(parent), out.level[k] + 1);
                    stack.extend(out.children[k].iter().map(|&c| (c, v)));
                }
                Node::Point(i) => {
                    let group = &groups[i];
                    let at =
                        if group.len() > 1 && tree.level(parent) > 1 { tree.push(Some(parent), 1) } else { parent };
                    for &q in group {
                        leaf[q] = Some(tree.push(Some(at), 0));
                    }
                }
            }
        }
    }
    Acyclic { tree, leaf, bot }
}
