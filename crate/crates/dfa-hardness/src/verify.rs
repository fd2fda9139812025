use std::collections::BTreeSet;

use dfa_core::{is_minimal, Ext, Mode};
use dfa_kmin::{count_symdiff, sizes_for_all_k, Bound, KSimilarity};
use serde::Serialize;

use crate::kmin::check_kmin_params;
use crate::{Family, HardnessError, HardnessInstance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of comparing an instance with a candidate small automaton.
/// Big counts are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub family: String,
    pub vertices: usize,
    pub edges: usize,
    pub s: Option<usize>,
    pub k: Option<usize>,
    pub instance_states: usize,
    pub colored_states: usize,
    /// Colored states that are not gadget states.
    pub colored_core_states: usize,
    /// `None` when the difference is infinite.
    pub errors: Option<String>,
    pub expected_min: String,
    pub expected_max: String,
    pub max_error_len: Option<usize>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

fn check(name: &str, pass: bool, detail: String) -> Check {
    Check { name: name.to_string(), pass, detail }
}

/// Counts `L(instance) △ L(colored)` exactly and evaluates the family's
/// checks.
pub fn verify_hardness(inst: &HardnessInstance, colored: &dfa_core::Dfa) -> Result<Report, HardnessError> {
    let d = &inst.dfa;
    let left: BTreeSet<&String> = d.alphabet().iter().collect();
    let right: BTreeSet<&String> = colored.alphabet().iter().collect();
    if left != right {
        return Err(HardnessError::Argument("instance and colored automaton use different alphabets".into()));
    }
    let g = &inst.graph;
    let diff = count_symdiff(d, colored, Bound::Auto);
    let (errors, max_error_len) = match &diff {
        Ok(s) => (Some(s.count.clone()), s.max_error_len),
        Err(_) => (None, None),
    };
    let gadget: BTreeSet<&str> = inst.gadget_states.iter().map(String::as_str).collect();
    let colored_core_states = colored.names().iter().filter(|n| !gadget.contains(n.as_str())).count();
    let errors_text = errors.as_ref().map_or("infinite".to_string(), ToString::to_string);
    let mut checks = vec![check("finite_difference", errors.is_some(), errors_text.clone())];
    let (s, k) = match inst.family {
        Family::Hyper => {
            let n = 14 + g.num_vertices();
            checks.push(check("instance_states", d.num_states() == n, format!("{} (expected {n})", d.num_states())));
            let total_minimal = d.is_total() && is_minimal(d, Mode::Total);
            checks.push(check("instance_total_minimal", total_minimal, String::new()));
            checks.push(check(
                "colored_states",
                colored.num_states() <= 14,
                format!("{} (at most 14)", colored.num_states()),
            ));
            let exact = errors.as_ref() == Some(&inst.expected.min);
            checks.push(check("errors_exact", exact, format!("{errors_text} (expected {})", inst.expected.min)));
            (None, None)
        }
        Family::Kmin { s, k, .. } => {
            let params = check_kmin_params(g, s, k);
            checks.push(check("parameters", params.is_ok(), params.err().map_or(String::new(), |e| e.to_string())));
            let in_range = errors.as_ref().is_some_and(|e| *e >= inst.expected.min && *e <= inst.expected.max);
            checks.push(check(
                "errors_in_range",
                in_range,
                format!("{errors_text} in [{}, {}]", inst.expected.min, inst.expected.max),
            ));
            let short = errors.is_some() && max_error_len.is_none_or(|l| l < k);
            let len = max_error_len.map_or("none".to_string(), |l| l.to_string());
            checks.push(check("error_words_shorter_than_k", short, format!("longest {len}, k = {k}")));
            let dissimilar = pairwise_dissimilar(colored, k);
            checks.push(check("pairwise_k_dissimilar", dissimilar.is_ok(), dissimilar.err().unwrap_or_default()));
            let sizes = sizes_for_all_k(d);
            let size = sizes[k.min(sizes.len() - 1)];
            checks.push(check(
                "k_minimal_size",
                size == colored.num_states(),
                format!("k-minimal size {size}, colored {}", colored.num_states()),
            ));
            (Some(s), Some(k))
        }
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        family: match inst.family {
            Family::Hyper => "hyper",
            Family::Kmin { .. } => "kmin",
        }
        .to_string(),
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        s,
        k,
        instance_states: d.num_states(),
        colored_states: colored.num_states(),
        colored_core_states,
        errors: errors.map(|e| e.to_string()),
        expected_min: inst.expected.min.to_string(),
        expected_max: inst.expected.max.to_string(),
        max_error_len,
        checks,
        pass,
    })
}

/// `Err` names the first k-similar pair.
fn pairwise_dissimilar(d: &dfa_core::Dfa, k: usize) -> Result<(), String> {
    let sim = KSimilarity::new(d).map_err(|e| e.to_string())?;
    for q in 0..d.num_states() {
        for p in q + 1..d.num_states() {
            if sim.similar(q, p, k) {
                let dist = match sim.distance(q, p) {
                    Ext::Fin(x) => x.to_string(),
                    Ext::Inf => "inf".into(),
                };
                return Err(format!("`{}` ~ `{}` (distance {dist})", d.name(q), d.name(p)));
            }
        }
    }
    Ok(())
}
