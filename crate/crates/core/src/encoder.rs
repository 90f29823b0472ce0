//! Builds the Hamiltonian-cycle formula `F = F1 & F2` for a graph.
//!
//! `F1` has one block per vertex: exactly two of its incident edges are
//! chosen. `F2` has one block per vertex set `S` of a non-spanning simple
//! cycle: at least two boundary edges of `S` with distinct inside endpoints
//! are chosen. Variable `i` is edge `i`.

use std::fmt;

use crate::cycles::{crossing_pairs, distinct_cycle_vertex_sets, enumerate_simple_cycles, Cycle, VertexSet};
use crate::error::Result;
use crate::formula::{Block, Cube, Formula, Literal, Provenance};
use crate::graph::Graph;

/// A structural precondition the graph fails. Each one makes the encoding
/// constant false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Warning {
    LowDegree { vertex: usize, degree: usize },
    NoCrossingPairs { set: VertexSet },
}

impl Warning {
    pub fn describe(&self, g: &Graph) -> String {
        match *self {
            Warning::LowDegree { vertex, degree } => format!(
                "vertex {} has degree {degree} < 2; its block is constant false",
                g.vertex_label(vertex)
            ),
            Warning::NoCrossingPairs { set } => {
                let names: Vec<&str> = set.iter().map(|v| g.vertex_label(v)).collect();
                format!(
                    "cycle vertex set {{{}}} has no pair of boundary edges with distinct endpoints; its block is constant false",
                    names.join(",")
                )
            }
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::LowDegree { vertex, degree } => write!(f, "low degree: vertex #{vertex} has degree {degree}"),
            Warning::NoCrossingPairs { set } => write!(f, "no crossing pairs for vertex set {set}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EncodingReport {
    pub formula: Formula,
    pub f1_block_count: usize,
    pub f2_block_count: usize,
    pub cube_count_total: usize,
    pub cycle_count: usize,
    pub warnings: Vec<Warning>,
}

impl EncodingReport {
    pub fn f1(&self) -> Formula {
        self.formula.slice(0..self.f1_block_count)
    }

    pub fn f2(&self) -> Formula {
        self.formula
            .slice(self.f1_block_count..self.f1_block_count + self.f2_block_count)
    }
}

fn edge_labels(g: &Graph) -> Vec<String> {
    g.edges().iter().map(|e| e.display_label()).collect()
}

/// `d(v)`: one cube per pair of incident edges, the pair positive and every
/// other incident edge negative. Cubes follow the lexicographic order of the
/// positive pair. Degree below two yields the empty (false) block.
pub fn vertex_block(g: &Graph, v: usize) -> Block {
    let mut incident: Vec<usize> = g.neighbors(v).iter().map(|&(_, e)| e).collect();
    incident.sort_unstable();
    let mut cubes = Vec::new();
    for i in 0..incident.len() {
        for j in i + 1..incident.len() {
            let lits = incident.iter().enumerate().map(|(k, &e)| Literal {
                var: e,
                positive: k == i || k == j,
            });
            cubes.push(Cube::new(lits).expect("incident edges are distinct"));
        }
    }
    Block::new(cubes, Provenance::Vertex(v))
}

pub fn build_f1(g: &Graph) -> Result<Formula> {
    g.ensure_word_sized()?;
    let blocks = (0..g.n()).map(|v| vertex_block(g, v)).collect();
    Formula::with_labels(edge_labels(g), blocks)
}

/// `D(S)`: one positive two-edge cube per crossing pair of `s`.
pub fn cycle_block(g: &Graph, s: VertexSet) -> Block {
    let cubes = crossing_pairs(g, s)
        .into_iter()
        .map(|p| Cube::new([Literal::pos(p.e1), Literal::pos(p.e2)]).expect("distinct edges"))
        .collect();
    Block::new(cubes, Provenance::CycleSet(s))
}

/// One block per distinct non-spanning cycle vertex set. `cycles` must be the
/// complete cycle list of `g`.
pub fn build_f2(g: &Graph, cycles: &[Cycle]) -> Result<Formula> {
    g.ensure_word_sized()?;
    let blocks = distinct_cycle_vertex_sets(cycles, true)
        .into_iter()
        .map(|s| cycle_block(g, s))
        .collect();
    Formula::with_labels(edge_labels(g), blocks)
}

pub fn build_full(g: &Graph, max_cycles: usize) -> Result<EncodingReport> {
    let f1 = build_f1(g)?;
    let cycles = enumerate_simple_cycles(g, max_cycles)?;
    let f2 = build_f2(g, &cycles)?;

    let mut warnings = Vec::new();
    for block in f1.blocks().iter().chain(f2.blocks()) {
        if !block.is_constant_false() {
            continue;
        }
        match block.provenance {
            Provenance::Vertex(v) => warnings.push(Warning::LowDegree {
                vertex: v,
                degree: g.degree(v),
            }),
            Provenance::CycleSet(set) => warnings.push(Warning::NoCrossingPairs { set }),
            Provenance::Other => {}
        }
    }

    let formula = f1.and(&f2)?;
    Ok(EncodingReport {
        f1_block_count: f1.blocks().len(),
        f2_block_count: f2.blocks().len(),
        cube_count_total: formula.cube_count(),
        cycle_count: cycles.len(),
        formula,
        warnings,
    })
}
