use std::collections::BTreeMap;

use dfa_core::{equivalence_classes, reachable, state_meta, Dfa, Ext, StateId};

use crate::acyclic::{build_acyclic, Acyclic};
use crate::forest::{DistanceForest, Draft, BOTTOM_NAME};
use crate::trie::Tries;
use crate::vectors::{DTree, Node, Sparse, VectorTree};
use crate::DistanceError;

/// Rewrite statistics of one forest construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RewriteStats {
    /// Number of coordinates tracked.
    pub entries: usize,
    /// Most rewrites of a single coordinate.
    pub max_rewrites: usize,
    pub total_rewrites: usize,
    /// Grouping phases run.
    pub phases: usize,
}

fn check_minimal(d: &Dfa) -> Result<(), DistanceError> {
    if let Some(q) = reachable(d).iter().position(|r| !r) {
        return Err(DistanceError::Unreachable(d.name(q).to_string()));
    }
    let cls = equivalence_classes(d);
    let mut seen = vec![None; cls.count];
    for q in 0..d.num_states() {
        if let Some(p) = seen[cls.class_of[q]] {
            return Err(DistanceError::NotMinimal(d.name(p).to_string(), d.name(q).to_string()));
        }
        seen[cls.class_of[q]] = Some(q);
    }
    Ok(())
}

/// Per-state longest accepted word lengths and signatures.
type Lengths = (Vec<Option<Ext>>, Vec<Vec<usize>>);

/// The `m` value of every state (longest accepted word; `None` when dead).
fn longest_words(d: &Dfa) -> Result<Lengths, DistanceError> {
    let meta = state_meta(d).map_err(|e| DistanceError::Unreachable(e.to_string()))?;
    Ok((meta.m, meta.signature))
}

fn vertex_states(a: &Acyclic) -> Vec<Option<usize>> {
    let mut at = vec![None; a.tree.len()];
    for (q, v) in a.leaf.iter().enumerate() {
        if let Some(v) = v {
            at[*v] = Some(q);
        }
    }
    at
}

/// Distance tree of an automaton whose states all have finite
/// right-languages. The empty language gets its own leaf (index `n`) unless
/// a dead state already stands for it.
pub fn acyclic_distance_tree(d: &Dfa) -> Result<DistanceForest, DistanceError> {
    check_minimal(d)?;
    let (m, _) = longest_words(d)?;
    if let Some(q) = m.iter().position(|m| *m == Some(Ext::Inf)) {
        return Err(DistanceError::InfiniteLanguage(d.name(q).to_string()));
    }
    let bottom = m.iter().position(Option::is_none);
    let acyclic = build_acyclic(d, &m, bottom);
    let mut names = d.names().to_vec();
    if bottom.is_none() {
        names.push(BOTTOM_NAME.to_string());
    }
    let mut draft = Draft::default();
    let at = vertex_states(&acyclic);
    draft.absorb(&acyclic.tree, |v| at[v]);
    Ok(draft.finish(names, d.num_states(), None, false))
}

/// Distance forest of a minimal automaton.
pub fn build_distance_forest(d: &Dfa) -> Result<DistanceForest, DistanceError> {
    build_distance_forest_instrumented(d).map(|(f, _)| f)
}

/// [`build_distance_forest`] together with rewrite counts of the coordinate
/// vectors.
pub fn build_distance_forest_instrumented(d: &Dfa) -> Result<(DistanceForest, RewriteStats), DistanceError> {
    check_minimal(d)?;
    let n = d.num_states();
    let mut draft = Draft::default();

    if d.is_total() {
        // One trie, one coordinate per symbol.
        let mut vertex: Vec<usize> = (0..n).map(|q| draft.add(0, Some(q))).collect();
        let mut tries = Tries::new(n, 1);
        for q in 0..n {
            tries.set_counter(q, 1);
            tries.insert(0, q, d.row(q).iter().map(|p| p.expect("total")).collect());
        }
        let phases = run_phases(&mut tries, &mut draft, &mut vertex, &TailPlan::default());
        let stats = stats(&tries, phases);
        return Ok((draft.finish(d.names().to_vec(), n, None, true), stats));
    }

    // Finite right-languages form one tree with the empty language.
    let (m, signature) = longest_words(d)?;
    let bottom = m.iter().position(Option::is_none);
    let acyclic = build_acyclic(d, &m, bottom);
    let at = vertex_states(&acyclic);
    let base = draft.absorb(&acyclic.tree, |v| at[v]);
    let mut vertex: Vec<usize> = (0..n).map(|q| acyclic.leaf[q].map_or(usize::MAX, |v| base + v)).collect();

    // Infinite states: one trie per signature; the symbols outside the
    // signature lead to finite languages and are summarised by one extra
    // coordinate naming the cluster of that tail.
    let infinite: Vec<StateId> = (0..n).filter(|&q| m[q] == Some(Ext::Inf)).collect();
    let mut tails: BTreeMap<Sparse, usize> = BTreeMap::new();
    let mut tail_of = vec![0; n];
    let mut sigs: BTreeMap<&[usize], usize> = BTreeMap::new();
    for &q in &infinite {
        let sig = signature[q].as_slice();
        let tail: Sparse = (0..d.num_symbols())
            .filter(|a| !sig.contains(a))
            .filter_map(|a| {
                let p = d.delta(q, a).filter(|&p| Some(p) != bottom)?;
                Some((a, acyclic.leaf[p].expect("finite successor is placed")))
            })
            .collect();
        let next = tails.len();
        tail_of[q] = *tails.entry(tail).or_insert(next);
        let next = sigs.len();
        sigs.entry(sig).or_insert(next);
        vertex[q] = draft.add(0, Some(q));
    }
    let clusters = tails.len();
    let mut tries = Tries::new(n + clusters, sigs.len());
    let mut cluster_size = vec![0; clusters];
    for &q in &infinite {
        cluster_size[tail_of[q]] += 1;
    }
    for (c, &size) in cluster_size.iter().enumerate() {
        tries.set_counter(n + c, size);
    }
    for &q in &infinite {
        tries.set_counter(q, 1);
        let mut coords: Vec<usize> =
            signature[q].iter().map(|&a| d.delta(q, a).expect("signature successor")).collect();
        coords.push(n + tail_of[q]);
        tries.insert(sigs[signature[q].as_slice()], q, coords);
    }

    let mut plan = TailPlan { base: n, ..TailPlan::default() };
    if clusters > 1 {
        let mut root = acyclic.bot;
        while let Some(p) = acyclic.tree.parent(root) {
            root = p;
        }
        let mut vt = VectorTree::new(&acyclic.tree, acyclic.bot);
        let items = tails.into_keys().enumerate().map(|(i, v)| (v, Node::Point(i))).collect();
        vt.build(items, 0, acyclic.tree.level(root));
        plan.dtree = vt.out;
        plan.order = (0..plan.dtree.level.len()).collect();
        plan.order.sort_by_key(|&k| plan.dtree.level[k]);
    }
    let phases = run_phases(&mut tries, &mut draft, &mut vertex, &plan);
    let stats = stats(&tries, phases);
    // Without a dead state the empty language is not a state and its leaf goes.
    let drop = bottom.is_none().then_some(n);
    Ok((draft.finish(d.names().to_vec(), n, drop, true), stats))
}

/// Ultrametric tree of the tail clusters, whose labels start at `base`.
#[derive(Default)]
struct TailPlan {
    dtree: DTree,
    /// Inner nodes by ascending level.
    order: Vec<usize>,
    base: usize,
}

fn stats(tries: &Tries, phases: usize) -> RewriteStats {
    let (max_rewrites, total_rewrites, entries) = tries.rewrite_counts();
    RewriteStats { entries, max_rewrites, total_rewrites, phases }
}

fn merge_labels(tries: &mut Tries, labels: &[usize]) -> usize {
    let rep = tries.representative(labels);
    let total = labels.iter().map(|&l| tries.counter(l)).sum();
    for &l in labels {
        if l != rep {
            tries.replace(l, rep);
        }
    }
    tries.set_counter(rep, total);
    rep
}

/// Phase `l` joins the items at distance exactly `l`: first the tail
/// clusters meeting at level `l - 1` are merged, then every trie leaf holding
/// several items becomes a vertex at level `l` and its items are replaced by
/// the one with the largest counter.
fn run_phases(tries: &mut Tries, draft: &mut Draft, vertex: &mut [usize], plan: &TailPlan) -> usize {
    let mut rep_of = vec![usize::MAX; plan.dtree.level.len()];
    let mut next = 0;
    let mut phase = 0;
    loop {
        phase += 1;
        while next < plan.order.len() && plan.dtree.level[plan.order[next]] < phase {
            let k = plan.order[next];
            next += 1;
            let labels: Vec<usize> = plan.dtree.children[k]
                .iter()
                .map(|c| match *c {
                    Node::Point(i) => plan.base + i,
                    Node::Inner(j) => rep_of[j],
                })
                .collect();
            rep_of[k] = merge_labels(tries, &labels);
        }
        let groups = tries.take_groups();
        if groups.is_empty() {
            if next == plan.order.len() {
                return phase - 1;
            }
            continue;
        }
        let mut pending = Vec::new();
        for (leaf, items) in groups {
            let rep = tries.representative(&items);
            let total = items.iter().map(|&x| tries.counter(x)).sum();
            let v = draft.add(phase, None);
            for &x in &items {
                draft.set_parent(vertex[x], v);
                if x != rep {
                    pending.push((x, rep));
                }
            }
            vertex[rep] = v;
            tries.set_counter(rep, total);
            tries.collapse(leaf, rep);
        }
        for (x, rep) in pending {
            tries.replace(x, rep);
        }
    }
}
