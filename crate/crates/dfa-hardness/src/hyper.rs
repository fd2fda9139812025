use dfa_core::{Dfa, StateId};
use num_bigint::BigUint;

use crate::graph::{Coloring, Graph};
use crate::{Expected, Family, HardnessError, HardnessInstance};

pub(crate) fn vertex_letter(g: &Graph, v: usize) -> String {
    format!("v_{}", g.vertex(v))
}

pub(crate) fn edge_letter(g: &Graph, (u, v): (usize, usize)) -> String {
    format!("e_{},{}", g.vertex(u), g.vertex(v))
}

/// `{a, b} ∪ V ∪ E`.
pub(crate) fn base_alphabet(g: &Graph) -> Vec<String> {
    let mut alphabet = vec!["a".to_string(), "b".to_string()];
    alphabet.extend((0..g.num_vertices()).map(|v| vertex_letter(g, v)));
    alphabet.extend(g.edges().iter().map(|&e| edge_letter(g, e)));
    alphabet
}

struct Kernel {
    bot: StateId,
    smiley1: StateId,
    frown1: StateId,
}

/// Adds the kernel shared by both automata: `bot`, `inf`, `smiley`, `frown`
/// and the three-state `a`-chains in front of `smiley` and `frown`.
fn kernel(d: &mut Dfa) -> Kernel {
    let bot = d.add_state("bot");
    let inf = d.add_state("inf");
    let smiley = d.add_state("smiley");
    let frown = d.add_state("frown");
    let smileys: Vec<StateId> = (1..=3).map(|j| d.add_state(format!("smiley_{j}"))).collect();
    let frowns: Vec<StateId> = (1..=3).map(|j| d.add_state(format!("frown_{j}"))).collect();
    d.set_accepting(inf, true);
    d.set_accepting(smiley, true);
    let (a, b) = (0, 1);
    d.set_delta(inf, a, Some(smileys[0]));
    d.set_delta(inf, b, Some(frowns[0]));
    for (chain, end) in [(&smileys, smiley), (&frowns, frown)] {
        d.set_delta(chain[0], a, Some(chain[1]));
        d.set_delta(chain[1], a, Some(chain[2]));
        d.set_delta(chain[2], a, Some(end));
        d.set_delta(chain[2], b, Some(end));
        d.set_delta(end, b, Some(inf));
    }
    Kernel { bot, smiley1: smileys[0], frown1: frowns[0] }
}

/// Sends every undefined transition to `bot`.
fn complete(d: &mut Dfa, bot: StateId) {
    for q in 0..d.num_states() {
        for a in 0..d.num_symbols() {
            if d.delta(q, a).is_none() {
                d.set_delta(q, a, Some(bot));
            }
        }
    }
}

/// Total automaton with `14 + |V|` states over `{a, b} ∪ V ∪ E` whose
/// 14-state hyper-equivalent versions exist exactly for 3-colourable graphs.
pub fn build_hyper_instance(g: &Graph) -> Result<HardnessInstance, HardnessError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(HardnessError::IsolatedVertex(g.vertex(v).to_string()));
    }
    let mut d = Dfa::new(base_alphabet(g));
    let top = d.add_state("top");
    let k = kernel(&mut d);
    let vs: Vec<StateId> = (0..g.num_vertices()).map(|v| d.add_state(vertex_letter(g, v))).collect();
    let bsmileys: Vec<StateId> = (1..=3).map(|j| d.add_state(format!("bsmiley_{j}"))).collect();
    let (smiley, frown) = (d.state_id("smiley").unwrap(), d.state_id("frown").unwrap());
    d.set_delta(bsmileys[0], 0, Some(bsmileys[1]));
    d.set_delta(bsmileys[1], 0, Some(bsmileys[2]));
    d.set_delta(bsmileys[2], 0, Some(smiley));
    d.set_delta(bsmileys[2], 1, Some(frown));

    let vbase = 2;
    let ebase = 2 + g.num_vertices();
    for (v, &q) in vs.iter().enumerate() {
        d.set_delta(top, vbase + v, Some(q));
        for (i, &(v1, v2)) in g.edges().iter().enumerate() {
            let target = if v == v1 {
                k.smiley1
            } else if v == v2 {
                k.frown1
            } else {
                bsmileys[0]
            };
            d.set_delta(q, ebase + i, Some(target));
        }
    }
    complete(&mut d, k.bot);

    let m = BigUint::from(g.num_edges()) * BigUint::from(g.num_vertices() - 2);
    Ok(HardnessInstance {
        dfa: d,
        graph: g.clone(),
        family: Family::Hyper,
        expected: Expected { min: m.clone(), max: m },
        gadget_states: Vec::new(),
    })
}

/// The 14-state automaton for a proper colouring: vertices collapse onto
/// colour states `c1, c2, c3`, and colour `i` reads edge `{v1, v2}` into
/// `frown_1` when `v2` has colour `i`, else into `smiley_1`.
pub fn build_hyper_colored(g: &Graph, c: &Coloring) -> Result<Dfa, HardnessError> {
    c.check(g)?;
    Ok(build_hyper_colored_unchecked(g, c))
}

/// [`build_hyper_colored`] without the properness check, for measuring the
/// cost of improper colourings.
pub fn build_hyper_colored_unchecked(g: &Graph, c: &Coloring) -> Dfa {
    let mut d = Dfa::new(base_alphabet(g));
    let top = d.add_state("top");
    let k = kernel(&mut d);
    let colors: Vec<StateId> = (1..=3).map(|i| d.add_state(format!("c{i}"))).collect();
    let vbase = 2;
    let ebase = 2 + g.num_vertices();
    for v in 0..g.num_vertices() {
        d.set_delta(top, vbase + v, Some(colors[usize::from(c.color(v)) - 1]));
    }
    for (i, &(_, v2)) in g.edges().iter().enumerate() {
        for (ci, &q) in colors.iter().enumerate() {
            let target = if usize::from(c.color(v2)) == ci + 1 { k.frown1 } else { k.smiley1 };
            d.set_delta(q, ebase + i, Some(target));
        }
    }
    complete(&mut d, k.bot);
    d
}
