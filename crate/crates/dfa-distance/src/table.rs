use std::collections::HashMap;

use dfa_core::{equivalence_classes, Dfa, Ext, StateId};

/// All pairwise distances of an automaton, including the distance of every
/// state to the empty language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<Ext>,
}

impl DistanceTable {
    pub fn num_states(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: StateId, p: StateId) -> Ext {
        assert!(q < self.n && p < self.n, "state out of range");
        self.d[q * (self.n + 1) + p]
    }

    /// Distance of the right-language of `q` to the empty language.
    pub fn to_empty(&self, q: StateId) -> Ext {
        assert!(q < self.n, "state out of range");
        self.d[q * (self.n + 1) + self.n]
    }
}

/// Distances by iterated coarsening: round 0 is language equivalence, and two
/// states share a class in round `l` when every symbol leads them to a shared
/// class of round `l - 1` (a missing transition leads to the empty language).
pub fn distance_table(d: &Dfa) -> DistanceTable {
    let n = d.num_states();
    let k = d.num_symbols();
    let ext = n + 1;
    let classes = equivalence_classes(d);
    let bot_class = classes.dead.unwrap_or(classes.count);
    let mut class: Vec<usize> = classes.class_of.clone();
    class.push(bot_class);
    let mut count = classes.count + usize::from(classes.dead.is_none());

    let mut dist = vec![Ext::Inf; ext * ext];
    let set = |x: usize, y: usize, v: usize, dist: &mut Vec<Ext>| {
        dist[x * ext + y] = Ext::Fin(v);
        dist[y * ext + x] = Ext::Fin(v);
    };
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (x, &c) in class.iter().enumerate() {
        members[c].push(x);
    }
    for m in &members {
        for &x in m {
            for &y in m {
                set(x, y, 0, &mut dist);
            }
        }
    }

    let mut round = 0;
    loop {
        round += 1;
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<usize> = (0..ext)
            .map(|x| {
                let key: Vec<usize> = (0..k)
                    .map(|a| {
                        let succ = if x == n { None } else { d.delta(x, a) };
                        class[succ.unwrap_or(n)]
                    })
                    .collect();
                let fresh = ids.len();
                *ids.entry(key).or_insert(fresh)
            })
            .collect();
        if ids.len() == count {
            break;
        }
        // Each new class is a union of old ones; pairs across the old parts
        // meet in this round.
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); ids.len()];
        for (old, m) in members.iter().enumerate() {
            if !m.is_empty() {
                parts[next[m[0]]].push(old);
            }
        }
        for olds in &parts {
            for (i, &c1) in olds.iter().enumerate() {
                for &c2 in &olds[i + 1..] {
                    for &x in &members[c1] {
                        for &y in &members[c2] {
                            set(x, y, round, &mut dist);
                        }
                    }
                }
            }
        }
        members = vec![Vec::new(); ids.len()];
        for (x, &c) in next.iter().enumerate() {
            members[c].push(x);
        }
        class = next;
        count = ids.len();
    }

    let d = (0..n).flat_map(|q| dist[q * ext..(q + 1) * ext].to_vec()).collect();
    DistanceTable { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dfa_core::parse_dfa;

    #[test]
    fn chain_distances() {
        // q0 -a-> q1 -a-> q2, only q2 accepting: d(qi, qj) = max(m)+1.
        let d = parse_dfa("alphabet: a\nstates: q0 q1 q2\nstart: q0\naccept: q2\ntrans: q0 a q1\ntrans: q1 a q2\n")
            .unwrap();
        let t = distance_table(&d);
        assert_eq!(t.get(0, 0), Ext::Fin(0));
        assert_eq!(t.get(0, 1), Ext::Fin(3));
        assert_eq!(t.get(1, 2), Ext::Fin(2));
        assert_eq!(t.to_empty(2), Ext::Fin(1));
        assert_eq!(t.to_empty(0), Ext::Fin(3));
    }

    #[test]
    fn cycles_stay_apart() {
        // Even versus odd length over a one-letter alphabet never agree.
        let d = parse_dfa("alphabet: a\nstates: e o\nstart: e\naccept: e\ntrans: e a o\ntrans: o a e\n").unwrap();
        let t = distance_table(&d);
        assert_eq!(t.get(0, 1), Ext::Inf);
        assert_eq!(t.to_empty(0), Ext::Inf);
    }

    #[test]
    fn equivalent_states_are_at_zero() {
        let d = parse_dfa("alphabet: a\nstates: p q\nstart: p\naccept: p q\ntrans: p a q\ntrans: q a p\n").unwrap();
        assert_eq!(distance_table(&d).get(0, 1), Ext::Fin(0));
    }
}
