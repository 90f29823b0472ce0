//! Deciding the encoding, decoding models into Hamiltonian cycles, and lazy
//! refinement that adds cycle blocks only for sub-cycles it actually meets.

use std::fmt;
use std::str::FromStr;

use crate::cycles::{Cycle, VertexSet, DEFAULT_MAX_CYCLES};
use crate::encoder::{build_f1, build_full, cycle_block};
use crate::error::{Error, Result};
use crate::formula::cnf::{parse_dimacs_model, tseitin_cnf};
use crate::formula::dnf::{expand_to_dnf, DEFAULT_MAX_CUBES};
use crate::formula::{Assignment, Formula};
use crate::graph::Graph;

/// Default cap on variables for exhaustive enumeration.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 26;
pub const DEFAULT_MAX_ROUNDS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Dnf,
    Lazy,
    External,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Dnf => "dnf",
            Method::Lazy => "lazy",
            Method::External => "external",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::Brute),
            "dnf" => Ok(Method::Dnf),
            "lazy" => Ok(Method::Lazy),
            "external" => Ok(Method::External),
            other => Err(format!("unknown method {other:?} (expected brute|dnf|lazy|external)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub assignments_tested: u64,
    pub search_nodes: u64,
    pub rounds: usize,
    pub blocks_added: usize,
    pub dnf_cubes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub satisfiable: bool,
    pub models: Vec<Assignment>,
    /// Canonical Hamiltonian cycle of each model, when a graph was attached.
    pub decoded_cycles: Vec<Vec<usize>>,
    pub stats: SolveStats,
    pub method: Method,
    /// Vertex sets whose blocks were added by lazy refinement.
    pub added_sets: Vec<VertexSet>,
}

impl SolveResult {
    fn new(method: Method, models: Vec<Assignment>, stats: SolveStats) -> Self {
        SolveResult {
            satisfiable: !models.is_empty(),
            models,
            decoded_cycles: Vec::new(),
            stats,
            method,
            added_sets: Vec::new(),
        }
    }

    /// Decodes every model as a Hamiltonian cycle of `g`. A model that does
    /// not decode means the encoding is wrong, so it is an internal error.
    pub fn attach_cycles(mut self, g: &Graph) -> Result<Self> {
        self.decoded_cycles = self
            .models
            .iter()
            .map(|a| {
                decode_cycle(g, a).map_err(|defect| {
                    Error::Internal(format!("model {a} is not a Hamiltonian cycle: {defect}"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(self)
    }
}

/// Tests all `2^m` assignments in increasing binary order.
pub fn brute_force_solve(f: &Formula, find_all: bool) -> Result<SolveResult> {
    brute_force_solve_with_limit(f, find_all, DEFAULT_BRUTE_FORCE_LIMIT)
}

pub fn brute_force_solve_with_limit(f: &Formula, find_all: bool, max_vars: usize) -> Result<SolveResult> {
    let m = f.m();
    if m > max_vars || m >= 64 {
        return Err(Error::TooManyVariables { m, limit: max_vars.min(63) });
    }
    let mut models = Vec::new();
    let mut tested = 0u64;
    for bits in 0u64..(1u64 << m) {
        tested += 1;
        if f.holds(bits) {
            models.push(Assignment::new(m, bits));
            if !find_all {
                break;
            }
        }
    }
    let stats = SolveStats {
        assignments_tested: tested,
        ..SolveStats::default()
    };
    Ok(SolveResult::new(Method::Brute, models, stats))
}

/// Backtracking model search that fixes variables from the highest index down,
/// trying false first, so models come out in increasing binary order. A branch
/// is cut as soon as some block has no cube consistent with the partial
/// assignment.
fn search_models(f: &Formula, limit: Option<usize>) -> (Vec<Assignment>, u64) {
    let m = f.m();
    let mut blocks_of_var: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, b) in f.blocks().iter().enumerate() {
        let support = b.cubes.iter().fold(0u64, |acc, c| acc | c.support());
        for (v, list) in blocks_of_var.iter_mut().enumerate() {
            if support >> v & 1 == 1 {
                list.push(i);
            }
        }
    }
    let mut state = Search {
        f,
        blocks_of_var,
        limit,
        models: Vec::new(),
        nodes: 0,
    };
    if !f.has_constant_false_block() {
        state.descend(m, 0, 0);
    }
    (state.models, state.nodes)
}

struct Search<'a> {
    f: &'a Formula,
    blocks_of_var: Vec<Vec<usize>>,
    limit: Option<usize>,
    models: Vec<Assignment>,
    nodes: u64,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.models.len() >= l)
    }

    /// `remaining` variables `0..remaining` are still free.
    fn descend(&mut self, remaining: usize, assigned: u64, bits: u64) {
        self.nodes += 1;
        if remaining == 0 {
            self.models.push(Assignment::new(self.f.m(), bits));
            return;
        }
        let var = remaining - 1;
        let assigned = assigned | 1u64 << var;
        for value in [false, true] {
            if self.done() {
                return;
            }
            let bits = if value { bits | 1u64 << var } else { bits };
            let alive = self.blocks_of_var[var].iter().all(|&b| {
                self.f.blocks()[b].cubes.iter().any(|c| {
                    c.positive_mask() & assigned & !bits == 0 && c.negative_mask() & assigned & bits == 0
                })
            });
            if alive {
                self.descend(var, assigned, bits);
            }
        }
    }
}

/// Models from the absorbed DNF of `f`.
pub fn dnf_solve(f: &Formula, find_all: bool, max_cubes: usize) -> Result<SolveResult> {
    let cubes = expand_to_dnf(f, max_cubes)?;
    let m = f.m();
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut models: Vec<Assignment> = if find_all {
        let free_vars = cubes.iter().map(|c| (full & !c.support()).count_ones()).max().unwrap_or(0);
        if free_vars as usize > DEFAULT_BRUTE_FORCE_LIMIT {
            return Err(Error::TooManyVariables {
                m: free_vars as usize,
                limit: DEFAULT_BRUTE_FORCE_LIMIT,
            });
        }
        let mut all = Vec::new();
        for c in &cubes {
            let free = full & !c.support();
            // every subset of the free variables
            let mut sub = 0u64;
            loop {
                all.push(Assignment::new(m, c.positive_mask() | sub));
                sub = sub.wrapping_sub(free) & free;
                if sub == 0 {
                    break;
                }
            }
        }
        all
    } else {
        cubes.iter().map(|c| Assignment::new(m, c.positive_mask())).min().into_iter().collect()
    };
    models.sort();
    models.dedup();
    let stats = SolveStats {
        dnf_cubes: cubes.len(),
        ..SolveStats::default()
    };
    Ok(SolveResult::new(Method::Dnf, models, stats))
}

/// Why an assignment is not a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeFailure {
    WrongDegree { vertex: usize, degree: usize },
    /// The chosen edges form a 2-factor with several cycles.
    DisjointCycles(Vec<Cycle>),
}

impl fmt::Display for DecodeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodeFailure::WrongDegree { vertex, degree } => {
                write!(f, "vertex #{vertex} has {degree} chosen edges")
            }
            DecodeFailure::DisjointCycles(cycles) => write!(f, "{} disjoint cycles", cycles.len()),
        }
    }
}

/// Reads the chosen edges of `a` as a spanning cycle of `g` and returns its
/// canonical vertex sequence.
pub fn decode_cycle(g: &Graph, a: &Assignment) -> std::result::Result<Vec<usize>, DecodeFailure> {
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in a.true_vars() {
        let edge = g.edge(e);
        adj[edge.u].push(edge.v);
        adj[edge.v].push(edge.u);
    }
    if let Some((vertex, list)) = adj.iter().enumerate().find(|(_, l)| l.len() != 2) {
        return Err(DecodeFailure::WrongDegree {
            vertex,
            degree: list.len(),
        });
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut walk = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, adj[start][0]);
        while cur != start {
            seen[cur] = true;
            walk.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        cycles.push(Cycle::from_walk(g, &walk).expect("walk over chosen edges is a cycle"));
    }
    if cycles.len() == 1 {
        Ok(cycles.pop().unwrap().vertices)
    } else {
        Err(DecodeFailure::DisjointCycles(cycles))
    }
}

/// Solves `F1`, then repeatedly adds the cycle block of every sub-cycle found
/// in a non-Hamiltonian model and solves again. With `find_all`, a round only
/// succeeds once every model of the current formula is Hamiltonian.
pub fn lazy_refine_solve(g: &Graph, max_rounds: usize) -> Result<SolveResult> {
    lazy_refine(g, max_rounds, false)
}

pub fn lazy_refine(g: &Graph, max_rounds: usize, find_all: bool) -> Result<SolveResult> {
    let mut formula = build_f1(g)?;
    let mut stats = SolveStats::default();
    let mut added: Vec<VertexSet> = Vec::new();

    for round in 1..=max_rounds {
        stats.rounds = round;
        let (models, nodes) = search_models(&formula, if find_all { None } else { Some(1) });
        stats.search_nodes += nodes;

        let mut new_sets: Vec<VertexSet> = Vec::new();
        for a in &models {
            match decode_cycle(g, a) {
                Ok(_) => {}
                Err(DecodeFailure::DisjointCycles(cycles)) => {
                    for c in cycles {
                        if !added.contains(&c.vertex_set) && !new_sets.contains(&c.vertex_set) {
                            new_sets.push(c.vertex_set);
                        }
                    }
                }
                Err(defect) => {
                    return Err(Error::Internal(format!("F1 model {a} is not a 2-factor: {defect}")));
                }
            }
        }

        if new_sets.is_empty() {
            let mut result = SolveResult::new(Method::Lazy, models, stats);
            result.added_sets = added;
            return result.attach_cycles(g);
        }
        for s in new_sets {
            formula.push_block(cycle_block(g, s));
            added.push(s);
            stats.blocks_added += 1;
        }
    }
    Err(Error::RoundLimitExceeded {
        rounds: max_rounds,
        blocks_added: stats.blocks_added,
    })
}

/// Checks a solver's answer for the CNF export of `build_full(g)`.
pub fn solve_via_external(g: &Graph, solver_output: &str, max_cycles: usize) -> Result<SolveResult> {
    let report = build_full(g, max_cycles)?;
    let unsat = solver_output.lines().any(|l| {
        let l = l.trim();
        l == "s UNSATISFIABLE" || l == "UNSAT" || l == "UNSATISFIABLE"
    });
    if unsat {
        return Ok(SolveResult::new(Method::External, Vec::new(), SolveStats::default()));
    }
    let cnf = tseitin_cnf(&report.formula);
    let a = parse_dimacs_model(solver_output, &cnf)?;
    if !report.formula.evaluate(&a)? {
        return Err(Error::ModelInvalid(format!(
            "projected assignment {a} falsifies the formula"
        )));
    }
    let cycle = decode_cycle(g, &a)
        .map_err(|d| Error::Internal(format!("model {a} satisfies F but is not Hamiltonian: {d}")))?;
    let mut result = SolveResult::new(Method::External, vec![a], SolveStats::default());
    result.decoded_cycles = vec![cycle];
    Ok(result)
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub find_all: bool,
    pub max_cycles: usize,
    pub max_cubes: usize,
    pub max_rounds: usize,
    pub brute_force_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            find_all: false,
            max_cycles: DEFAULT_MAX_CYCLES,
            max_cubes: DEFAULT_MAX_CUBES,
            max_rounds: DEFAULT_MAX_ROUNDS,
            brute_force_limit: DEFAULT_BRUTE_FORCE_LIMIT,
        }
    }
}

/// Runs one of the in-process methods on `g` and decodes the models.
pub fn solve_graph(g: &Graph, method: Method, opts: &SolveOptions) -> Result<SolveResult> {
    match method {
        Method::Brute => {
            let report = build_full(g, opts.max_cycles)?;
            brute_force_solve_with_limit(&report.formula, opts.find_all, opts.brute_force_limit)?.attach_cycles(g)
        }
        Method::Dnf => {
            let report = build_full(g, opts.max_cycles)?;
            dnf_solve(&report.formula, opts.find_all, opts.max_cubes)?.attach_cycles(g)
        }
        Method::Lazy => lazy_refine(g, opts.max_rounds, opts.find_all),
        Method::External => Err(Error::ModelParse(
            "external method needs solver output; use solve_via_external".into(),
        )),
    }
}
