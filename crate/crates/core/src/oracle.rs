//! Brute-force ground truth for Hamiltonicity and 2-factors.
//!
//! Nothing here uses the encoder, the cycle enumerator or the formula code;
//! only [`Graph`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_HAMILTONIAN_VERTICES: usize = 14;
pub const MAX_TWO_FACTOR_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HamiltonianCycleSet {
    /// Canonical vertex sequences: start at vertex 0, second vertex smaller than the last.
    pub cycles: Vec<Vec<usize>>,
}

impl HamiltonianCycleSet {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// All Hamiltonian cycles by backtracking from vertex 0. A cycle is only
/// reported when its second vertex is smaller than its last, which removes
/// the reversed duplicate.
pub fn find_hamiltonian_cycles(g: &Graph) -> Result<HamiltonianCycleSet> {
    let n = g.n();
    if n > MAX_HAMILTONIAN_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count for Hamiltonian backtracking",
            size: n,
            limit: MAX_HAMILTONIAN_VERTICES,
        });
    }
    let mut found = HamiltonianCycleSet::default();
    if n < 3 {
        return Ok(found);
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    backtrack(g, &mut path, &mut used, &mut found.cycles);
    found.cycles.sort();
    Ok(found)
}

fn backtrack(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let n = g.n();
    let tip = *path.last().unwrap();
    if path.len() == n {
        let closes = g.neighbors(tip).iter().any(|&(w, _)| w == 0);
        if closes && path[1] < tip {
            out.push(path.clone());
        }
        return;
    }
    for &(w, _) in g.neighbors(tip) {
        if !used[w] {
            used[w] = true;
            path.push(w);
            backtrack(g, path, used, out);
            path.pop();
            used[w] = false;
        }
    }
}

/// A spanning subgraph where every vertex has degree two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    /// Bit `i` set iff edge `i` is used.
    pub edge_mask: u64,
    /// Vertex sequences of the disjoint cycles, each starting at its smallest
    /// vertex, ordered by that vertex.
    pub cycles: Vec<Vec<usize>>,
}

impl TwoFactor {
    pub fn edge_indices(&self) -> Vec<usize> {
        (0..64).filter(|i| self.edge_mask >> i & 1 == 1).collect()
    }
}

/// Every edge subset in which each vertex has degree exactly two, found by
/// testing all `2^m` subsets in increasing order.
pub fn enumerate_2factors(g: &Graph) -> Result<Vec<TwoFactor>> {
    let m = g.m();
    if m > MAX_TWO_FACTOR_EDGES {
        return Err(Error::TooLarge {
            what: "edge count for 2-factor enumeration",
            size: m,
            limit: MAX_TWO_FACTOR_EDGES,
        });
    }
    let n = g.n();
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut out = Vec::new();
    let mut degree = vec![0u8; n];
    if n == 0 {
        return Ok(out);
    }
    for mask in 0u64..(1u64 << m) {
        if (mask.count_ones() as usize) != n {
            continue;
        }
        degree.iter_mut().for_each(|d| *d = 0);
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            degree[ends[e].0] += 1;
            degree[ends[e].1] += 1;
        }
        if degree.iter().all(|&d| d == 2) {
            out.push(TwoFactor {
                edge_mask: mask,
                cycles: decompose(n, &ends, mask),
            });
        }
    }
    Ok(out)
}

fn decompose(n: usize, ends: &[(usize, usize)], mask: u64) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::with_capacity(2); n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        if mask >> e & 1 == 1 {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = adj[start][0].min(adj[start][1]);
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Erdős–Rényi `G(n, p)` with vertices labelled `1..=n`, deterministic in `seed`.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    let p = edge_probability.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated pairs are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn fig_a() -> Graph {
        parse_edge_list("a 2 3\nb 3 5\nc 3 4\nd 2 5\ne 4 5\nf 1 2\ng 1 4\n").unwrap()
    }

    fn theta() -> Graph {
        parse_edge_list("a 2 3\nc 3 4\nd 2 5\ne 4 5\nf 1 2\ng 1 4\n").unwrap()
    }

    #[test]
    fn example_hamiltonian_cycles() {
        let g = fig_a();
        let hc = find_hamiltonian_cycles(&g).unwrap();
        let walks: Vec<String> = hc.cycles.iter().map(|c| g.format_walk(c)).collect();
        assert_eq!(walks, ["1-2-3-5-4", "1-2-5-3-4"]);
        assert!(find_hamiltonian_cycles(&theta()).unwrap().is_empty());
    }

    #[test]
    fn c5_has_one_cycle() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(find_hamiltonian_cycles(&g).unwrap().count(), 1);
    }

    #[test]
    fn hamiltonian_guard() {
        let g = random_graph(15, 0.5, 1);
        assert!(matches!(find_hamiltonian_cycles(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn two_factors() {
        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let f = enumerate_2factors(&tri).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].edge_mask, 0b111);

        assert_eq!(enumerate_2factors(&fig_a()).unwrap().len(), 2);

        let two = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let f = enumerate_2factors(&two).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].cycles, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        let k5 = random_graph(5, 1.0, 9);
        assert_eq!(k5.m(), 10);
        assert_eq!(random_graph(5, 0.0, 9).m(), 0);
        assert_eq!(random_graph(8, 0.5, 42), random_graph(8, 0.5, 42));
    }
}
