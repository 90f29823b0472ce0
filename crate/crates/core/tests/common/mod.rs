//! Fixtures and independent reference computations shared by the integration tests.
#![allow(dead_code)]

use hcpsat::formula::cnf::CnfInstance;
use hcpsat::formula::{Block, Cube, Formula, Literal, Provenance};
use hcpsat::{parse_edge_list, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EXAMPLE: &str = include_str!("../../testdata/example.edges");
pub const THETA: &str = include_str!("../../testdata/theta.edges");
pub const TWO_TRIANGLES: &str = include_str!("../../testdata/two_triangles.edges");

pub fn example() -> Graph {
    parse_edge_list(EXAMPLE).unwrap()
}

pub fn theta() -> Graph {
    parse_edge_list(THETA).unwrap()
}

pub fn two_triangles() -> Graph {
    parse_edge_list(TWO_TRIANGLES).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Number of simple cycles in `K_n`: sum over k of C(n,k) (k-1)!/2.
pub fn complete_graph_cycle_count(n: u64) -> u64 {
    (3..=n).map(|k| binomial(n, k) * factorial(k - 1) / 2).sum()
}

/// Distinct non-spanning cycle vertex sets of `K_n`: every subset of size 3..n-1.
pub fn complete_graph_proper_cycle_sets(n: u64) -> u64 {
    (3..n).map(|k| binomial(n, k)).sum()
}

/// Models of `f` by direct evaluation of every assignment.
pub fn formula_models(f: &Formula) -> Vec<u64> {
    (0u64..(1u64 << f.m())).filter(|&a| f.holds(a)).collect()
}

/// Projections onto the first `edge_count` variables of every model of the
/// CNF, found by enumerating all `2^num_vars` assignments.
pub fn cnf_projected_models(c: &CnfInstance) -> Vec<u64> {
    assert!(c.num_vars <= 26, "exhaustive CNF enumeration too large");
    let clauses: Vec<(u64, u64)> = c
        .clauses
        .iter()
        .map(|cl| {
            cl.iter().fold((0u64, 0u64), |(p, n), &lit| {
                let bit = 1u64 << (lit.unsigned_abs() - 1);
                if lit > 0 {
                    (p | bit, n)
                } else {
                    (p, n | bit)
                }
            })
        })
        .collect();
    let edge_mask = (1u64 << c.edge_count()) - 1;
    let mut out: Vec<u64> = (0u64..(1u64 << c.num_vars))
        .filter(|&a| clauses.iter().all(|&(p, n)| a & p != 0 || !a & n != 0))
        .map(|a| {
            let mut bits = 0;
            for (edge, &var) in c.edge_var_map.iter().enumerate() {
                bits |= (a >> (var - 1) & 1) << edge;
            }
            bits & edge_mask
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Random block formula over `m` variables.
pub fn random_formula(rng: &mut ChaCha8Rng, m: usize, blocks: usize, max_cubes: usize) -> Formula {
    let blocks = (0..blocks)
        .map(|_| {
            let cubes = (0..rng.gen_range(0..=max_cubes))
                .filter_map(|_| {
                    let lits: Vec<Literal> = (0..rng.gen_range(1..=3.min(m)))
                        .map(|_| Literal {
                            var: rng.gen_range(0..m),
                            positive: rng.gen_bool(0.5),
                        })
                        .collect();
                    Cube::new(lits)
                })
                .collect();
            Block::new(cubes, Provenance::Other)
        })
        .collect();
    Formula::new(m, blocks).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edge index set of an assignment named by edge labels.
pub fn bits_of(g: &Graph, labels: &[&str]) -> u64 {
    labels
        .iter()
        .map(|l| 1u64 << g.edge_by_label(l).unwrap().index)
        .fold(0, |a, b| a | b)
}
