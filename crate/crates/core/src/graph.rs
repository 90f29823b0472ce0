//! Undirected simple graphs and the line-oriented edge-list format.
//!
//! Vertices are dense indices `0..n`; every vertex keeps a display label so
//! output can use the names from the input file. Edges are stored in input
//! order and the edge index doubles as the Boolean variable index of the
//! encoding.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result, ValidationError};

/// Largest vertex or edge count supported by the bitmask-based solvers.
pub const MAX_WORD_SIZE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub index: usize,
    /// Smaller endpoint.
    pub u: usize,
    /// Larger endpoint.
    pub v: usize,
    pub label: Option<String>,
}

impl Edge {
    /// The label used in formulas and listings: the explicit label or `e<index>`.
    pub fn display_label(&self) -> String {
        match &self.label {
            Some(label) => label.clone(),
            None => format!("e{}", self.index),
        }
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_labels: Vec<String>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `1..=n` from unlabelled endpoint pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges.iter().map(|&(u, v)| (u, v, None)).collect())
    }

    pub fn with_labels(
        vertex_labels: Vec<String>,
        edges: Vec<(usize, usize, Option<String>)>,
    ) -> Result<Self> {
        let n = vertex_labels.len();
        let mut seen_pairs: HashMap<(usize, usize), usize> = HashMap::new();
        let mut seen_labels: HashSet<String> = HashSet::new();
        let mut out: Vec<Edge> = Vec::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); n];

        for (index, (a, b, label)) in edges.into_iter().enumerate() {
            for w in [a, b] {
                if w >= n {
                    return Err(ValidationError::VertexOutOfRange { vertex: w, n }.into());
                }
            }
            let edge = Edge {
                index,
                u: a.min(b),
                v: a.max(b),
                label,
            };
            if a == b {
                return Err(ValidationError::Loop {
                    edge: edge.display_label(),
                    vertex: vertex_labels[a].clone(),
                }
                .into());
            }
            if let Some(&first) = seen_pairs.get(&(edge.u, edge.v)) {
                return Err(ValidationError::DuplicateEdge {
                    u: vertex_labels[edge.u].clone(),
                    v: vertex_labels[edge.v].clone(),
                    first: out[first].display_label(),
                    second: edge.display_label(),
                }
                .into());
            }
            if !seen_labels.insert(edge.display_label()) {
                return Err(ValidationError::DuplicateLabel(edge.display_label()).into());
            }
            seen_pairs.insert((edge.u, edge.v), index);
            adjacency[edge.u].push((edge.v, index));
            adjacency[edge.v].push((edge.u, index));
            out.push(edge);
        }

        Ok(Graph {
            vertex_labels,
            edges: out,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// `(neighbor, edge index)` pairs incident to `v`, in edge order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|l| l == label)
    }

    pub fn edge_by_label(&self, label: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.display_label() == label)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edge index joining `a` and `b`, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.adjacency[a]
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
    }

    /// Vertices with degree below two. A non-empty result means the graph
    /// cannot be Hamiltonian and the encoding will be constant false.
    pub fn check_min_degree(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) < 2).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Fails unless both `n` and `m` fit in one machine word.
    pub fn ensure_word_sized(&self) -> Result<()> {
        if self.n() > MAX_WORD_SIZE {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: self.n(),
                limit: MAX_WORD_SIZE,
            });
        }
        if self.m() > MAX_WORD_SIZE {
            return Err(Error::TooLarge {
                what: "edge count",
                size: self.m(),
                limit: MAX_WORD_SIZE,
            });
        }
        Ok(())
    }

    /// Renders the graph in edge-list format, one `LABEL U V` line per edge.
    /// Edges without an explicit label are written as `U V`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let (u, v) = (&self.vertex_labels[e.u], &self.vertex_labels[e.v]);
            match &e.label {
                Some(label) => out.push_str(&format!("{label} {u} {v}\n")),
                None => out.push_str(&format!("{u} {v}\n")),
            }
        }
        out
    }

    /// Renders a vertex sequence as `v0-v1-...` using vertex labels.
    pub fn format_walk(&self, vertices: &[usize]) -> String {
        vertices
            .iter()
            .map(|&v| self.vertex_label(v))
            .collect::<Vec<_>>()
            .join("-")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Parses the edge-list format.
///
/// Each non-empty line not starting with `#` is `LABEL U V` or `U V`.
/// When every vertex token is an unsigned integer the vertices are indexed in
/// numeric order; otherwise in order of first appearance. Edge order follows
/// the file.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut raw: Vec<(Option<String>, String, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if let Some(bad) = tokens.iter().find(|t| t.contains('#')) {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("bad token {bad:?}"),
            });
        }
        let entry = match tokens.as_slice() {
            [label, u, v] => (Some(label.to_string()), u.to_string(), v.to_string()),
            [u, v] => (None, u.to_string(), v.to_string()),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `LABEL U V` or `U V`, found {} tokens", tokens.len()),
                })
            }
        };
        raw.push(entry);
    }

    let mut order: Vec<String> = Vec::new();
    let mut seen: HashSet<&str> = HashSet::new();
    for (_, u, v) in &raw {
        for t in [u, v] {
            if seen.insert(t.as_str()) {
                order.push(t.clone());
            }
        }
    }
    let numeric: Option<Vec<u64>> = order.iter().map(|t| t.parse::<u64>().ok()).collect();
    if let Some(keys) = numeric {
        let mut paired: Vec<(u64, String)> = keys.into_iter().zip(order).collect();
        paired.sort();
        order = paired.into_iter().map(|(_, t)| t).collect();
    }
    let index: HashMap<&str, usize> = order
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i))
        .collect();

    let edges = raw
        .iter()
        .map(|(label, u, v)| (index[u.as_str()], index[v.as_str()], label.clone()))
        .collect();
    Graph::with_labels(order.clone(), edges)
}
