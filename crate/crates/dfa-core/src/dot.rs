use std::collections::BTreeMap;
use std::fmt::Write;

use crate::Dfa;

/// Quotes `s` as a Graphviz string identifier.
pub fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering; parallel edges are folded into one comma-separated label.
pub fn to_dot(d: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..d.num_states() {
        let shape = if d.is_accepting(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  {} [shape={shape}];", quote(d.name(q))).unwrap();
    }
    writeln!(out, "  __start -> {};", quote(d.name(d.start()))).unwrap();
    let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (q, a, p) in d.transitions() {
        edges.entry((q, p)).or_default().push(d.symbol(a));
    }
    for ((q, p), labels) in edges {
        writeln!(out, "  {} -> {} [label={}];", quote(d.name(q)), quote(d.name(p)), quote(&labels.join(","))).unwrap();
    }
    out.push_str("}\n");
    out
}
