//! Simple-cycle enumeration and the boundary structures of a cycle's vertex set.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_CYCLES: usize = 1_000_000;

/// A set of vertices stored as a 64-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Sort key used for deterministic block order: size, then bit pattern.
    pub fn order_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// A simple cycle in canonical form: starts at its minimum vertex and
/// continues toward the smaller of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub vertex_set: VertexSet,
    /// `edge_indices[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
    pub edge_indices: Vec<usize>,
    pub spanning: bool,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Builds the canonical cycle from any closed walk of distinct vertices.
    /// Returns `None` if the walk is shorter than 3 or uses a non-edge.
    pub fn from_walk(g: &Graph, walk: &[usize]) -> Option<Cycle> {
        let k = walk.len();
        if k < 3 {
            return None;
        }
        let set = VertexSet::from_vertices(walk.iter().copied());
        if set.len() != k {
            return None;
        }
        let start = (0..k).min_by_key(|&i| walk[i])?;
        let next = walk[(start + 1) % k];
        let prev = walk[(start + k - 1) % k];
        let vertices: Vec<usize> = if next < prev {
            (0..k).map(|i| walk[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| walk[(start + k - i) % k]).collect()
        };
        let edge_indices = (0..k)
            .map(|i| g.edge_between(vertices[i], vertices[(i + 1) % k]))
            .collect::<Option<Vec<_>>>()?;
        Some(Cycle {
            spanning: k == g.n(),
            vertices,
            vertex_set: set,
            edge_indices,
        })
    }
}

/// Every simple cycle of `g`, each exactly once in canonical form, sorted by
/// `(length, vertex sequence)`.
///
/// Cycles are grown by DFS from each root over vertices larger than the root,
/// and closed only when the second vertex is smaller than the last, so each
/// undirected cycle is produced once.
pub fn enumerate_simple_cycles(g: &Graph, max_cycles: usize) -> Result<Vec<Cycle>> {
    g.ensure_word_sized()?;
    let n = g.n();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);

    for root in 0..n {
        path.clear();
        edges.clear();
        path.push(root);
        extend(g, root, VertexSet::from_vertices([root]), &mut path, &mut edges, max_cycles, &mut out)?;
    }

    out.sort_by(|a, b| {
        a.vertices
            .len()
            .cmp(&b.vertices.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(out)
}

fn extend(
    g: &Graph,
    root: usize,
    visited: VertexSet,
    path: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    max_cycles: usize,
    out: &mut Vec<Cycle>,
) -> Result<()> {
    let tip = *path.last().expect("path starts at root");
    for &(w, e) in g.neighbors(tip) {
        if w == root {
            if path.len() >= 3 && path[1] < tip {
                if out.len() == max_cycles {
                    return Err(Error::CycleOverflow { limit: max_cycles });
                }
                let mut edge_indices = edges.clone();
                edge_indices.push(e);
                out.push(Cycle {
                    vertices: path.clone(),
                    vertex_set: visited,
                    edge_indices,
                    spanning: path.len() == g.n(),
                });
            }
        } else if w > root && !visited.contains(w) {
            path.push(w);
            edges.push(e);
            let mut next = visited;
            next.insert(w);
            extend(g, root, next, path, edges, max_cycles, out)?;
            path.pop();
            edges.pop();
        }
    }
    Ok(())
}

/// `E(S)`: edges with exactly one endpoint in `s`, in edge order.
pub fn boundary_edges(g: &Graph, s: VertexSet) -> Vec<usize> {
    g.edges()
        .iter()
        .filter(|e| s.contains(e.u) != s.contains(e.v))
        .map(|e| e.index)
        .collect()
}

/// Two boundary edges of a vertex set whose endpoints inside the set differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryPair {
    pub e1: usize,
    pub e2: usize,
    pub a1: usize,
    pub a2: usize,
}

/// `R(S)`: all pairs of boundary edges with distinct inside endpoints, in
/// lexicographic `(e1, e2)` order.
pub fn crossing_pairs(g: &Graph, s: VertexSet) -> Vec<BoundaryPair> {
    let boundary: Vec<(usize, usize)> = boundary_edges(g, s)
        .into_iter()
        .map(|e| {
            let edge = g.edge(e);
            let inside = if s.contains(edge.u) { edge.u } else { edge.v };
            (e, inside)
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, &(e1, a1)) in boundary.iter().enumerate() {
        for &(e2, a2) in &boundary[i + 1..] {
            if a1 != a2 {
                pairs.push(BoundaryPair { e1, e2, a1, a2 });
            }
        }
    }
    pairs
}

/// Distinct vertex sets of `cycles`, sorted by size then bit pattern.
pub fn distinct_cycle_vertex_sets(cycles: &[Cycle], non_spanning_only: bool) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = cycles
        .iter()
        .filter(|c| !(non_spanning_only && c.spanning))
        .map(|c| c.vertex_set)
        .collect();
    sets.sort_by_key(|s| s.order_key());
    sets.dedup();
    sets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn fig_a() -> Graph {
        parse_edge_list("a 2 3\nb 3 5\nc 3 4\nd 2 5\ne 4 5\nf 1 2\ng 1 4\n").unwrap()
    }

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        VertexSet::from_vertices(labels.iter().map(|l| g.vertex_index(l).unwrap()))
    }

    fn edge_labels(g: &Graph, edges: &[usize]) -> Vec<String> {
        edges.iter().map(|&e| g.edge(e).display_label()).collect()
    }

    #[test]
    fn triangle_has_one_spanning_cycle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let cycles = enumerate_simple_cycles(&g, DEFAULT_MAX_CYCLES).unwrap();
        assert_eq!(cycles.len(), 1);
        assert!(cycles[0].spanning);
        assert_eq!(cycles[0].vertices, vec![0, 1, 2]);
        assert!(distinct_cycle_vertex_sets(&cycles, true).is_empty());
    }

    #[test]
    fn example_graph_cycles() {
        let g = fig_a();
        let cycles = enumerate_simple_cycles(&g, DEFAULT_MAX_CYCLES).unwrap();
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.spanning).count(), 2);
        let sets = distinct_cycle_vertex_sets(&cycles, true);
        let expected = vec![
            set(&g, &["2", "3", "5"]),
            set(&g, &["3", "4", "5"]),
            set(&g, &["1", "2", "3", "4"]),
            set(&g, &["1", "2", "4", "5"]),
            set(&g, &["2", "3", "4", "5"]),
        ];
        assert_eq!(sets, expected);
    }

    #[test]
    fn overflow_is_an_error() {
        let g = fig_a();
        assert_eq!(
            enumerate_simple_cycles(&g, 6).unwrap_err(),
            Error::CycleOverflow { limit: 6 }
        );
        assert_eq!(enumerate_simple_cycles(&g, 7).unwrap().len(), 7);
    }

    #[test]
    fn boundary_edges_of_example_sets() {
        let g = fig_a();
        assert_eq!(edge_labels(&g, &boundary_edges(&g, set(&g, &["1", "2", "4", "5"]))), ["a", "b", "c"]);
        assert_eq!(edge_labels(&g, &boundary_edges(&g, set(&g, &["2", "3", "5"]))), ["c", "e", "f"]);
        assert!(boundary_edges(&g, VertexSet::full(5)).is_empty());
    }

    #[test]
    fn crossing_pairs_of_example_sets() {
        let g = fig_a();
        let labels = |s| {
            crossing_pairs(&g, s)
                .iter()
                .map(|p| format!("{}{}", g.edge(p.e1).display_label(), g.edge(p.e2).display_label()))
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(set(&g, &["2", "3", "4", "5"])), ["fg"]);
        assert_eq!(labels(set(&g, &["3", "4", "5"])), ["ad", "ag", "dg"]);

        let two = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(crossing_pairs(&two, VertexSet::from_vertices([0, 1, 2])).is_empty());
    }

    #[test]
    fn k4_spanning_cycles_share_one_set() {
        let mut pairs = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                pairs.push((u, v));
            }
        }
        let g = Graph::new(4, &pairs).unwrap();
        let cycles = enumerate_simple_cycles(&g, DEFAULT_MAX_CYCLES).unwrap();
        assert_eq!(cycles.len(), 7);
        let spanning: Vec<_> = cycles.iter().filter(|c| c.spanning).cloned().collect();
        assert_eq!(spanning.len(), 3);
        assert_eq!(distinct_cycle_vertex_sets(&spanning, false), vec![VertexSet::full(4)]);
        assert_eq!(distinct_cycle_vertex_sets(&cycles, true).len(), 4);
    }

    #[test]
    fn canonical_form_from_any_walk() {
        let g = fig_a();
        let v = |l: &str| g.vertex_index(l).unwrap();
        let walk = [v("5"), v("3"), v("4"), v("1"), v("2")];
        let c = Cycle::from_walk(&g, &walk).unwrap();
        assert_eq!(g.format_walk(&c.vertices), "1-2-5-3-4");
        let reversed: Vec<usize> = walk.iter().rev().copied().collect();
        assert_eq!(Cycle::from_walk(&g, &reversed).unwrap(), c);
        assert!(Cycle::from_walk(&g, &[v("1"), v("3"), v("2")]).is_none());
    }
}
