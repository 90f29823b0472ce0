//! Encoder-versus-oracle equivalence checks over single graphs and corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::encoder::{build_f1, build_full};
use crate::error::{Error, Result};
use crate::formula::dnf::expand_to_dnf;
use crate::graph::Graph;
use crate::oracle::{enumerate_2factors, find_hamiltonian_cycles, random_graph, MAX_TWO_FACTOR_EDGES};
use crate::solver::{brute_force_solve, lazy_refine_solve, DEFAULT_BRUTE_FORCE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

pub const CHECK_NAMES: [&str; 5] = [
    "f1_models_eq_2factors",
    "sat_iff_hamiltonian",
    "models_eq_hamiltonian_cycles",
    "lazy_agrees",
    "dnf_agrees",
];

#[derive(Debug, Clone, Serialize)]
pub struct GraphCheck {
    pub n: usize,
    pub m: usize,
    pub two_factors: Option<usize>,
    pub hamiltonian_cycles: usize,
    pub f_models: usize,
    /// Outcomes in the order of [`CHECK_NAMES`].
    pub outcomes: [Outcome; 5],
    pub notes: Vec<String>,
}

impl GraphCheck {
    pub fn passed(&self) -> bool {
        !self.outcomes.contains(&Outcome::Fail)
    }
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// Runs every applicable check on `g`. Cap errors in optional checks mark the
/// check as skipped; cap errors in the mandatory encoding step are returned.
pub fn verify_graph(g: &Graph, max_cycles: usize, max_cubes: usize) -> Result<GraphCheck> {
    let mut notes = Vec::new();
    let mut outcomes = [Outcome::Skipped; 5];

    let oracle_hc = find_hamiltonian_cycles(g)?;
    let report = build_full(g, max_cycles)?;
    let full = brute_force_solve(&report.formula, true)?.models;
    let hc_exists = !oracle_hc.is_empty();

    let mut two_factor_count = None;
    if g.m() <= MAX_TWO_FACTOR_EDGES && g.m() <= DEFAULT_BRUTE_FORCE_LIMIT {
        let factors = enumerate_2factors(g)?;
        let f1 = build_f1(g)?;
        let f1_models: Vec<u64> = brute_force_solve(&f1, true)?.models.iter().map(|a| a.bits()).collect();
        let oracle: Vec<u64> = factors.iter().map(|t| t.edge_mask).collect();
        outcomes[0] = outcome(f1_models == oracle);
        if f1_models != oracle {
            notes.push(format!("F1 has {} models, oracle {} 2-factors", f1_models.len(), oracle.len()));
        }
        two_factor_count = Some(factors.len());
    }

    outcomes[1] = outcome(!full.is_empty() == hc_exists);

    let mut decoded = Vec::new();
    let mut decode_ok = true;
    for a in &full {
        match crate::solver::decode_cycle(g, a) {
            Ok(c) => decoded.push(c),
            Err(d) => {
                decode_ok = false;
                notes.push(format!("model {a} does not decode: {d}"));
            }
        }
    }
    decoded.sort();
    outcomes[2] = outcome(decode_ok && decoded == oracle_hc.cycles);
    if full.len() != oracle_hc.count() {
        notes.push(format!("{} models vs {} Hamiltonian cycles", full.len(), oracle_hc.count()));
    }

    match lazy_refine_solve(g, usize::MAX) {
        Ok(r) => outcomes[3] = outcome(r.satisfiable == hc_exists),
        Err(e) if e.is_cap_overflow() => notes.push(format!("lazy skipped: {e}")),
        Err(e) => {
            outcomes[3] = Outcome::Fail;
            notes.push(format!("lazy failed: {e}"));
        }
    }

    match expand_to_dnf(&report.formula, max_cubes) {
        Ok(cubes) => outcomes[4] = outcome(!cubes.is_empty() == hc_exists),
        Err(Error::ExpansionOverflow { .. }) => notes.push("dnf skipped: expansion cap".into()),
        Err(e) => return Err(e),
    }

    Ok(GraphCheck {
        n: g.n(),
        m: g.m(),
        two_factors: two_factor_count,
        hamiltonian_cycles: oracle_hc.count(),
        f_models: full.len(),
        outcomes,
        notes,
    })
}

/// Every labelled graph on `n` vertices (all `2^(n(n-1)/2)` edge subsets),
/// optionally only the connected ones.
pub fn exhaustive_graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "exhaustive corpus too large for n = {n}");
    (0u64..(1u64 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(n, &edges).expect("subset of simple pairs")
        })
        .filter(|g| !connected_only || g.is_connected())
        .collect()
}

/// `count` random graphs with `3 <= n <= max_n` and at most `max_m` edges,
/// deterministic in `seed`.
pub fn random_corpus(count: usize, seed: u64, max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=max_n.max(3));
        let p = rng.gen_range(0.25..0.9);
        let g = random_graph(n, p, rng.gen());
        if g.m() <= max_m {
            out.push(g);
        }
    }
    out
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub graphs: usize,
    pub tallies: Vec<CheckTally>,
    /// Indices into the corpus of graphs with at least one failed check.
    pub failing: Vec<usize>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

pub fn verify_corpus(graphs: &[Graph], max_cycles: usize, max_cubes: usize) -> Result<(CorpusReport, Vec<GraphCheck>)> {
    let mut tallies: Vec<CheckTally> = CHECK_NAMES
        .iter()
        .map(|&name| CheckTally {
            name,
            ..CheckTally::default()
        })
        .collect();
    let mut failing = Vec::new();
    let mut checks = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let check = verify_graph(g, max_cycles, max_cubes)?;
        for (t, o) in tallies.iter_mut().zip(check.outcomes) {
            match o {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail => t.fail += 1,
                Outcome::Skipped => t.skipped += 1,
            }
        }
        if !check.passed() {
            failing.push(i);
        }
        checks.push(check);
    }
    Ok((
        CorpusReport {
            graphs: graphs.len(),
            tallies,
            failing,
        },
        checks,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::DEFAULT_MAX_CYCLES;
    use crate::formula::dnf::DEFAULT_MAX_CUBES;
    use crate::graph::parse_edge_list;

    #[test]
    fn example_graph_verifies() {
        let g = parse_edge_list("a 2 3\nb 3 5\nc 3 4\nd 2 5\ne 4 5\nf 1 2\ng 1 4\n").unwrap();
        let c = verify_graph(&g, DEFAULT_MAX_CYCLES, DEFAULT_MAX_CUBES).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!((c.two_factors, c.hamiltonian_cycles, c.f_models), (Some(2), 2, 2));
        assert!(c.outcomes.iter().all(|&o| o == Outcome::Pass));
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_graphs(4, false).len(), 64);
        assert_eq!(exhaustive_graphs(4, true).len(), 38);
        assert_eq!(exhaustive_graphs(5, true).len(), 728);
    }

    #[test]
    fn random_corpus_respects_bounds() {
        let corpus = random_corpus(50, 3, 8, 18);
        assert_eq!(corpus.len(), 50);
        assert!(corpus.iter().all(|g| g.n() <= 8 && g.m() <= 18));
        assert_eq!(
            corpus.iter().map(Graph::m).collect::<Vec<_>>(),
            random_corpus(50, 3, 8, 18).iter().map(Graph::m).collect::<Vec<_>>()
        );
    }
}
