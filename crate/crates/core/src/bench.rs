//! Formula-size measurements across graph families.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::encoder::build_full;
use crate::error::{Error, Result};
use crate::families::{complete_graph, random_regular, theta_graph};
use crate::graph::Graph;
use crate::solver::lazy_refine_solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    Theta,
    RandomRegular,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Complete => "complete",
            Family::Theta => "theta",
            Family::RandomRegular => "random-regular",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "complete" => Ok(Family::Complete),
            "theta" => Ok(Family::Theta),
            "random-regular" => Ok(Family::RandomRegular),
            other => Err(format!("unknown family {other:?} (expected complete|theta|random-regular)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub cycle_count: usize,
    pub f2_block_count: usize,
    pub total_cube_count: usize,
    pub encode_time_ms: f64,
    pub solve_time_ms: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub degree: usize,
    pub seed: u64,
    pub max_cycles: usize,
    pub solve: bool,
}

pub fn family_graph(family: Family, n: usize, degree: usize, seed: u64) -> Result<Graph> {
    match family {
        Family::Complete => Ok(complete_graph(n)),
        Family::Theta => theta_graph(n),
        Family::RandomRegular => random_regular(n, degree, seed.wrapping_add(n as u64)),
    }
}

pub fn measure(family: Family, g: &Graph, max_cycles: usize, solve: bool) -> Result<BenchRecord> {
    let start = Instant::now();
    let report = build_full(g, max_cycles)?;
    let encode_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let solve_time_ms = if solve {
        let start = Instant::now();
        lazy_refine_solve(g, usize::MAX)?;
        Some(start.elapsed().as_secs_f64() * 1e3)
    } else {
        None
    };
    Ok(BenchRecord {
        family,
        n: g.n(),
        m: g.m(),
        cycle_count: report.cycle_count,
        f2_block_count: report.f2_block_count,
        total_cube_count: report.cube_count_total,
        encode_time_ms,
        solve_time_ms,
    })
}

/// One record per size, sorted by `n`. On error the records gathered so far
/// are returned alongside it.
pub fn run_bench(config: &BenchConfig) -> (Vec<BenchRecord>, Option<Error>) {
    let mut sizes = config.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let mut records = Vec::new();
    for n in sizes {
        let step = family_graph(config.family, n, config.degree, config.seed)
            .and_then(|g| measure(config.family, &g, config.max_cycles, config.solve));
        match step {
            Ok(r) => records.push(r),
            Err(e) => return (records, Some(e)),
        }
    }
    (records, None)
}

pub fn render_table(records: &[BenchRecord]) -> String {
    let mut out = format!(
        "{:<15} {:>3} {:>4} {:>10} {:>9} {:>11} {:>11} {:>11}\n",
        "family", "n", "m", "cycles", "f2_blocks", "cubes", "encode_ms", "solve_ms"
    );
    for r in records {
        let solve = r.solve_time_ms.map_or("-".to_string(), |t| format!("{t:.3}"));
        out.push_str(&format!(
            "{:<15} {:>3} {:>4} {:>10} {:>9} {:>11} {:>11.3} {:>11}\n",
            r.family.to_string(),
            r.n,
            r.m,
            r.cycle_count,
            r.f2_block_count,
            r.total_cube_count,
            r.encode_time_ms,
            solve
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::DEFAULT_MAX_CYCLES;

    #[test]
    fn k4_and_theta_records() {
        let r = measure(Family::Complete, &complete_graph(4), DEFAULT_MAX_CYCLES, true).unwrap();
        assert_eq!((r.cycle_count, r.f2_block_count), (7, 4));
        let t = measure(Family::Theta, &theta_graph(5).unwrap(), DEFAULT_MAX_CYCLES, false).unwrap();
        assert_eq!((t.cycle_count, t.f2_block_count), (3, 3));
        assert!(t.solve_time_ms.is_none());
    }

    #[test]
    fn overflow_keeps_partial_records() {
        let config = BenchConfig {
            family: Family::Complete,
            sizes: vec![6, 4, 5],
            degree: 3,
            seed: 0,
            max_cycles: 100,
            solve: false,
        };
        let (records, err) = run_bench(&config);
        assert_eq!(records.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 5]);
        assert_eq!(err, Some(Error::CycleOverflow { limit: 100 }));
    }
}
