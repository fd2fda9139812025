use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::HardnessError;

/// Undirected simple graph.
///
/// Vertices are kept in canonical order: numerically when every token is an
/// integer, lexicographically otherwise. Edges are stored as index pairs
/// `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

fn valid_vertex(s: &str) -> bool {
    !s.is_empty() && !s.contains(['#', ',']) && !s.chars().any(char::is_whitespace)
}

fn canonical_order(tokens: &mut [String]) {
    if tokens.iter().all(|t| t.parse::<i64>().is_ok()) {
        tokens.sort_by_key(|t| t.parse::<i64>().expect("checked"));
    } else {
        tokens.sort();
    }
}

impl Graph {
    /// Builds a graph from vertex tokens and edges between them; isolated
    /// vertices are allowed.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph, HardnessError> {
        let mut set: BTreeSet<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (u, v) in edges {
            set.insert(u.as_ref().to_string());
            set.insert(v.as_ref().to_string());
        }
        if let Some(bad) = set.iter().find(|v| !valid_vertex(v)) {
            return Err(HardnessError::Format { line: 0, msg: format!("invalid vertex `{bad}`") });
        }
        let mut vertices: Vec<String> = set.into_iter().collect();
        canonical_order(&mut vertices);
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut seen = BTreeSet::new();
        for (line, (u, v)) in edges.iter().enumerate() {
            let (u, v) = (index[u.as_ref()], index[v.as_ref()]);
            if u == v {
                return Err(HardnessError::Format { line: line + 1, msg: format!("self-loop on `{}`", vertices[u]) });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(HardnessError::Format {
                    line: line + 1,
                    msg: format!("duplicate edge `{} {}`", vertices[u], vertices[v]),
                });
            }
        }
        let edges = seen.into_iter().collect();
        Ok(Graph { vertices, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// First vertex without an incident edge.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.num_vertices()).find(|&v| self.degree(v) == 0)
    }

    /// Complete graph on `1, 2, 3`.
    pub fn k3() -> Graph {
        Graph::new(&["1", "2", "3"], &[("1", "2"), ("2", "3"), ("1", "3")]).expect("valid graph")
    }

    /// Cycle on `1..=5`.
    pub fn c5() -> Graph {
        let names: Vec<String> = (1..=5).map(|i| i.to_string()).collect();
        let edges: Vec<(String, String)> = (0..5).map(|i| (names[i].clone(), names[(i + 1) % 5].clone())).collect();
        Graph::new(&names, &edges).expect("valid graph")
    }

    /// Petersen graph: outer cycle `0..5`, spokes `i`-`i+5`, inner pentagram.
    pub fn petersen() -> Graph {
        let names: Vec<String> = (0..10).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((names[i].clone(), names[(i + 1) % 5].clone()));
            edges.push((names[i].clone(), names[i + 5].clone()));
            edges.push((names[i + 5].clone(), names[5 + (i + 2) % 5].clone()));
        }
        Graph::new(&names, &edges).expect("valid graph")
    }
}

/// Parses an edge list: one edge `u v` per line, `#` starts a comment. A
/// line with a single token declares an isolated vertex.
pub fn parse_graph(text: &str) -> Result<Graph, HardnessError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => vertices.push(v.to_string()),
            [u, v] => {
                edges.push((u.to_string(), v.to_string()));
                lines.push(i + 1);
            }
            _ => {
                return Err(HardnessError::Format {
                    line: i + 1,
                    msg: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    // Report errors against the source line rather than the edge index.
    Graph::new(&vertices, &edges).map_err(|e| match e {
        HardnessError::Format { line, msg } if line > 0 => HardnessError::Format { line: lines[line - 1], msg },
        e => e,
    })
}

/// Canonical edge list; isolated vertices follow as single-token lines.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in &g.edges {
        writeln!(out, "{} {}", g.vertices[u], g.vertices[v]).expect("write to string");
    }
    for v in (0..g.num_vertices()).filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{}", g.vertices[v]).expect("write to string");
    }
    out
}

/// Assignment of a colour in `1..=3` to every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    /// Colours indexed by vertex id.
    ///
    /// # Panics
    /// If a colour lies outside `1..=3`.
    pub fn new(colors: Vec<u8>) -> Coloring {
        assert!(colors.iter().all(|c| (1..=3).contains(c)), "colours are 1, 2 or 3");
        Coloring { colors }
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// First edge whose endpoints share a colour.
    pub fn monochromatic_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().iter().copied().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.num_vertices() && self.monochromatic_edge(g).is_none()
    }

    /// `Ok` for a proper colouring, otherwise the monochromatic edge.
    pub fn check(&self, g: &Graph) -> Result<(), HardnessError> {
        if self.colors.len() != g.num_vertices() {
            return Err(HardnessError::Argument(format!(
                "colouring has {} entries for {} vertices",
                self.colors.len(),
                g.num_vertices()
            )));
        }
        match self.monochromatic_edge(g) {
            None => Ok(()),
            Some((u, v)) => Err(HardnessError::ImproperColoring {
                u: g.vertex(u).to_string(),
                v: g.vertex(v).to_string(),
                color: self.colors[u],
            }),
        }
    }
}

/// Parses `vertex colour` lines; every vertex of `g` needs exactly one.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<Coloring, HardnessError> {
    let mut colors = vec![0u8; g.num_vertices()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| HardnessError::Format { line: i + 1, msg };
        match tokens.as_slice() {
            [] => {}
            [v, c] => {
                let id = g.vertex_id(v).ok_or_else(|| err(format!("unknown vertex `{v}`")))?;
                let c: u8 = c
                    .parse()
                    .ok()
                    .filter(|c| (1..=3).contains(c))
                    .ok_or_else(|| err(format!("colour `{c}` is not 1, 2 or 3")))?;
                if colors[id] != 0 {
                    return Err(err(format!("vertex `{v}` coloured twice")));
                }
                colors[id] = c;
            }
            _ => return Err(err("expected `vertex colour`".into())),
        }
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(HardnessError::Format { line: 0, msg: format!("vertex `{}` has no colour", g.vertex(v)) });
    }
    Ok(Coloring { colors })
}

pub fn serialize_coloring(c: &Coloring, g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.num_vertices() {
        writeln!(out, "{} {}", g.vertex(v), c.color(v)).expect("write to string");
    }
    out
}
