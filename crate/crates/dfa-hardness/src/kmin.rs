use std::collections::BTreeMap;

use dfa_core::{Dfa, StateId};
use num_bigint::BigUint;

use crate::gadget::{gadget_congruence, gadget_inlevel};
use crate::graph::{Coloring, Graph};
use crate::hyper::{base_alphabet, vertex_letter};
use crate::{Expected, Family, HardnessError, HardnessInstance};

/// Checks `s > log2 |V| + 2` and `k > 4s`.
pub fn check_kmin_params(g: &Graph, s: usize, k: usize) -> Result<(), HardnessError> {
    // s > log2|V| + 2  <=>  2^(s-2) > |V|
    let ok = s >= 3 && (s - 2 >= 64 || (1u128 << (s - 2)) > g.num_vertices() as u128);
    if !ok {
        return Err(HardnessError::Constraint(format!(
            "s > log(|V|) + 2 fails for s = {s}, |V| = {}",
            g.num_vertices()
        )));
    }
    if k <= 4 * s {
        return Err(HardnessError::Constraint(format!("k > 4s fails for k = {k}, s = {s}")));
    }
    Ok(())
}

/// `(m, m + 2^(s+1) |V|)` with `m = 2^(2s-1) |E| (|V|-2) + 3 · 2^(s-1) |E|`.
pub fn kmin_error_bounds(g: &Graph, s: usize) -> (BigUint, BigUint) {
    let e = BigUint::from(g.num_edges());
    let v = BigUint::from(g.num_vertices());
    let pow = |x: usize| BigUint::from(1u8) << x;
    let m = pow(2 * s - 1) * &e * BigUint::from(g.num_vertices().saturating_sub(2)) + pow(s - 1) * 3u8 * &e;
    let slack = pow(s + 1) * v;
    (m.clone(), m + slack)
}

/// State ids of the core automaton, by role.
struct Core {
    dfa: Dfa,
    chain: Vec<StateId>,
    vertices: Vec<StateId>,
    /// `roots[i]` is `(i+1)_0`.
    roots: [StateId; 3],
    ones: Vec<StateId>,
    twos: Vec<StateId>,
    smileys: Vec<StateId>,
    bsmiley: StateId,
    frown: StateId,
    bot: StateId,
}

/// The automaton before gadgets. `1_0` and `2_0` are states, and they reach
/// `1_1` and `2_1` on `a`, matching the `a`-transition of every vertex.
fn core(g: &Graph, s: usize, l: usize) -> Core {
    let mut d = Dfa::new(base_alphabet(g));
    let chain: Vec<StateId> = (0..=s).map(|i| d.add_state(i.to_string())).collect();
    let vertices: Vec<StateId> = (0..g.num_vertices()).map(|v| d.add_state(vertex_letter(g, v))).collect();
    let ones: Vec<StateId> = (0..=l).map(|j| d.add_state(format!("1_{j}"))).collect();
    let twos: Vec<StateId> = (0..=l).map(|j| d.add_state(format!("2_{j}"))).collect();
    let three = d.add_state("3_0");
    let smileys: Vec<StateId> = (0..=s).map(|i| d.add_state(format!("smiley_{i}"))).collect();
    let bsmiley = d.add_state("bsmiley");
    let frown = d.add_state("frown");
    let bot = d.add_state("bot");
    d.set_accepting(smileys[s], true);
    d.set_accepting(ones[l], true);

    let (a, b) = (0, 1);
    let vbase = 2;
    let ebase = 2 + g.num_vertices();
    for i in 1..=s {
        for x in [a, b] {
            d.set_delta(chain[i - 1], x, Some(chain[i]));
            d.set_delta(smileys[i - 1], x, Some(smileys[i]));
        }
    }
    let roots = [ones[0], twos[0], three];
    for (v, &q) in vertices.iter().enumerate() {
        d.set_delta(chain[s], vbase + v, Some(q));
        d.set_delta(q, a, Some(ones[1]));
        for (i, &(v1, v2)) in g.edges().iter().enumerate() {
            let target = if v == v1 {
                smileys[0]
            } else if v == v2 {
                frown
            } else {
                bsmiley
            };
            d.set_delta(q, ebase + i, Some(target));
        }
    }
    for &r in &roots {
        for i in 0..g.num_edges() {
            d.set_delta(r, ebase + i, Some(bsmiley));
        }
    }
    for line in [&ones, &twos] {
        d.set_delta(line[0], a, Some(line[1]));
        for j in 2..=l {
            d.set_delta(line[j - 1], b, Some(line[j]));
        }
        d.set_delta(line[l], b, Some(smileys[s]));
    }
    d.set_delta(bsmiley, a, Some(smileys[1]));
    for q in 0..d.num_states() {
        for x in 0..d.num_symbols() {
            if d.delta(q, x).is_none() {
                d.set_delta(q, x, Some(bot));
            }
        }
    }
    Core { dfa: d, chain, vertices, roots, ones, twos, smileys, bsmiley, frown, bot }
}

/// The k-minimisation instance: the core automaton with levels raised by
/// the level gadget (`3s - 1` for the colour roots, `k + 1` for `smiley_0`,
/// `frown`, `1_1`, `2_1`) and hyper-inequivalence enforced by the ring
/// gadget for the partition
/// `{bot, bsmiley, frown, smiley_*, 1_j, 2_j (j ≥ 1)}`, `V ∪ {1_0, 2_0, 3_0}`
/// and singletons.
pub fn build_kmin_instance(g: &Graph, s: usize, k: usize) -> Result<HardnessInstance, HardnessError> {
    check_kmin_params(g, s, k)?;
    let l = k - 2 * s;
    let c = core(g, s, l);
    let core_states = c.dfa.num_states();

    let mut minlevel = BTreeMap::new();
    for &r in &c.roots {
        minlevel.insert(r, 3 * s - 1);
    }
    for q in [c.smileys[0], c.frown, c.ones[1], c.twos[1]] {
        minlevel.insert(q, k + 1);
    }
    let leveled = gadget_inlevel(&c.dfa, &minlevel)?;

    let mut sink_class = vec![c.bot, c.bsmiley, c.frown];
    sink_class.extend(&c.smileys);
    sink_class.extend(&c.ones[1..]);
    sink_class.extend(&c.twos[1..]);
    let mut vertex_class = c.vertices.clone();
    vertex_class.extend(c.roots);
    let dfa = gadget_congruence(&leveled, &[sink_class, vertex_class])?;

    let gadget_states = dfa.names()[core_states..].to_vec();
    let (min, max) = kmin_error_bounds(g, s);
    debug_assert_eq!(c.chain[0], dfa.start());
    Ok(HardnessInstance {
        dfa,
        graph: g.clone(),
        family: Family::Kmin { s, k, l },
        expected: Expected { min, max },
        gadget_states,
    })
}

/// The colouring's k-similar automaton, obtained from the instance by
/// merging each vertex `v` into `c(v)_0`, rerouting edge letters on the
/// colour roots, merging `frown` into `bot` and deleting `bsmiley`. Gadget
/// states stay.
pub fn build_kmin_colored(g: &Graph, c: &Coloring, s: usize, k: usize) -> Result<Dfa, HardnessError> {
    c.check(g)?;
    build_kmin_colored_unchecked(g, c, s, k)
}

/// [`build_kmin_colored`] without the properness check. A colour root that
/// holds both ends of an edge follows the second endpoint.
pub fn build_kmin_colored_unchecked(g: &Graph, c: &Coloring, s: usize, k: usize) -> Result<Dfa, HardnessError> {
    if c.len() != g.num_vertices() {
        return Err(HardnessError::Argument(format!(
            "colouring has {} entries for {} vertices",
            c.len(),
            g.num_vertices()
        )));
    }
    let inst = build_kmin_instance(g, s, k)?;
    let mut d = inst.dfa;
    let id = |d: &Dfa, name: &str| d.state_id(name).expect("instance state");
    let roots = [id(&d, "1_0"), id(&d, "2_0"), id(&d, "3_0")];
    let (smiley0, frown, bsmiley, bot) = (id(&d, "smiley_0"), id(&d, "frown"), id(&d, "bsmiley"), id(&d, "bot"));
    let vertices: Vec<StateId> = (0..g.num_vertices()).map(|v| id(&d, &vertex_letter(g, v))).collect();

    let mut target: Vec<StateId> = (0..d.num_states()).collect();
    for (v, &q) in vertices.iter().enumerate() {
        target[q] = roots[usize::from(c.color(v)) - 1];
    }
    target[frown] = bot;
    for q in 0..d.num_states() {
        for x in 0..d.num_symbols() {
            if let Some(p) = d.delta(q, x) {
                d.set_delta(q, x, Some(target[p]));
            }
        }
    }
    let ebase = 2 + g.num_vertices();
    for (i, &(_, v2)) in g.edges().iter().enumerate() {
        for (j, &r) in roots.iter().enumerate() {
            let to = if usize::from(c.color(v2)) == j + 1 { bot } else { smiley0 };
            d.set_delta(r, ebase + i, Some(to));
        }
    }
    let mut gone = vertices;
    gone.extend([frown, bsmiley]);
    let keep: Vec<StateId> = (0..d.num_states()).filter(|q| !gone.contains(q)).collect();
    Ok(d.induced(&keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dfa_core::{state_meta, Ext};

    #[test]
    fn parameter_bounds() {
        let g = Graph::k3();
        assert!(check_kmin_params(&g, 4, 17).is_ok());
        assert!(matches!(check_kmin_params(&g, 3, 17), Err(HardnessError::Constraint(_))));
        assert!(check_kmin_params(&g, 4, 16).is_err());
        let (min, max) = kmin_error_bounds(&g, 4);
        assert_eq!((min, max), (BigUint::from(456u32), BigUint::from(552u32)));
    }

    #[test]
    fn k3_instance_shape() {
        let g = Graph::k3();
        let c = core(&g, 4, 9);
        assert_eq!(c.dfa.num_states(), 37);
        let inst = build_kmin_instance(&g, 4, 17).unwrap();
        // 18 chain states and 25 ring states.
        assert_eq!(inst.dfa.num_states(), 80);
        assert_eq!(inst.gadget_states.len(), 43);
        let meta = state_meta(&inst.dfa).unwrap();
        let level = |name: &str| meta.in_level[inst.dfa.state_id(name).unwrap()];
        assert_eq!(level("bsmiley"), Ext::Fin(12));
        assert_eq!(level("1_0"), Ext::Fin(11));
        assert_eq!(level("3_0"), Ext::Fin(11));
        assert_eq!(level("v_2"), Ext::Fin(5));
        assert_eq!(level("1_3"), Ext::Fin(20));
        assert_eq!(level("smiley_2"), Ext::Fin(20));
        assert_eq!(level("smiley_4"), Ext::Fin(27));
        assert_eq!(level("frown"), Ext::Fin(18));
        assert_eq!(level("4"), Ext::Fin(4));
        assert_eq!(level("bot"), Ext::Inf);
    }

    #[test]
    fn k3_colored_shape() {
        let g = Graph::k3();
        let d = build_kmin_colored(&g, &Coloring::new(vec![1, 2, 3]), 4, 17).unwrap();
        assert_eq!(d.num_states(), 75);
        let t = d.symbol_id("t").unwrap();
        // frown's ring entry was shared with bot, so no ring state is orphaned.
        assert!(d.names().iter().all(|n| !n.starts_with("v_") && n != "frown" && n != "bsmiley"));
        assert!(d.delta(d.state_id("bot").unwrap(), t).is_some());
        assert!(build_kmin_colored(&g, &Coloring::new(vec![1, 1, 3]), 4, 17).is_err());
    }
}
