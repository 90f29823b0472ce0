//! Conjunctions of blocks, where a block is a disjunction of cubes.
//!
//! This is the native shape of the Hamiltonian-cycle encoding. DNF and CNF
//! are derived views (see [`dnf`] and [`cnf`]).

pub mod cnf;
pub mod dnf;

use std::cmp::Ordering;
use std::fmt;

use crate::cycles::VertexSet;
use crate::error::{Error, Result};

/// Maximum number of variables a [`Formula`] can hold.
pub const MAX_VARS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }
}

/// A conjunction of non-contrary literals, stored as two variable masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Cube {
    pos: u64,
    neg: u64,
}

impl Cube {
    /// The empty conjunction (constant true).
    pub const TRUE: Cube = Cube { pos: 0, neg: 0 };

    /// Returns `None` if the literals contain a contrary pair.
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Option<Cube> {
        let mut cube = Cube::TRUE;
        for lit in literals {
            assert!(lit.var < MAX_VARS, "variable {} out of range", lit.var);
            let bit = 1u64 << lit.var;
            if lit.positive {
                cube.pos |= bit;
            } else {
                cube.neg |= bit;
            }
        }
        (cube.pos & cube.neg == 0).then_some(cube)
    }

    pub fn from_masks(pos: u64, neg: u64) -> Option<Cube> {
        (pos & neg == 0).then_some(Cube { pos, neg })
    }

    pub fn positive_mask(&self) -> u64 {
        self.pos
    }

    pub fn negative_mask(&self) -> u64 {
        self.neg
    }

    /// Mask of variables mentioned by the cube.
    pub fn support(&self) -> u64 {
        self.pos | self.neg
    }

    pub fn len(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.support() == 0
    }

    /// Literals in increasing variable order.
    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        let mut bits = self.support();
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let var = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Literal {
                var,
                positive: self.pos >> var & 1 == 1,
            })
        })
    }

    pub fn holds(&self, bits: u64) -> bool {
        bits & self.pos == self.pos && bits & self.neg == 0
    }

    /// Conjunction of two cubes, `None` when they contain contrary literals.
    pub fn and(&self, other: &Cube) -> Option<Cube> {
        Cube::from_masks(self.pos | other.pos, self.neg | other.neg)
    }

    /// True when every literal of `self` occurs in `other`, so `self ∨ other = self`.
    pub fn absorbs(&self, other: &Cube) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    fn sort_key(&self) -> Vec<(usize, bool)> {
        self.literals().map(|l| (l.var, !l.positive)).collect()
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_empty() {
            return "true".to_string();
        }
        self.literals()
            .map(|l| render_literal(l, labels))
            .collect::<Vec<_>>()
            .join(" & ")
    }

    /// Literals written back to back, e.g. `ad~f`.
    pub fn render_compact(&self, labels: &[String]) -> String {
        self.literals().map(|l| render_literal(l, labels)).collect()
    }
}

/// Canonical order: by length, then literal sequence with the positive
/// literal before the negative one on the same variable.
impl Ord for Cube {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for Cube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn render_literal(l: Literal, labels: &[String]) -> String {
    let name = labels
        .get(l.var)
        .cloned()
        .unwrap_or_else(|| format!("x{}", l.var + 1));
    if l.positive {
        name
    } else {
        format!("~{name}")
    }
}

/// Where a block came from in the encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Vertex(usize),
    CycleSet(VertexSet),
    Other,
}

/// A disjunction of cubes. No cubes means constant false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub cubes: Vec<Cube>,
    pub provenance: Provenance,
}

impl Block {
    /// Builds a block, dropping repeated cubes while keeping first-seen order.
    pub fn new(cubes: Vec<Cube>, provenance: Provenance) -> Self {
        let mut unique: Vec<Cube> = Vec::with_capacity(cubes.len());
        for c in cubes {
            if !unique.contains(&c) {
                unique.push(c);
            }
        }
        Block {
            cubes: unique,
            provenance,
        }
    }

    pub fn is_constant_false(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn holds(&self, bits: u64) -> bool {
        self.cubes.iter().any(|c| c.holds(bits))
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.cubes.is_empty() {
            return "(false)".to_string();
        }
        let parts: Vec<String> = self.cubes.iter().map(|c| c.render(labels)).collect();
        format!("({})", parts.join(" | "))
    }

    pub fn render_compact(&self, labels: &[String]) -> String {
        if self.cubes.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.cubes.iter().map(|c| c.render_compact(labels)).collect();
        format!("({})", parts.join("|"))
    }
}

/// Truth values for `width` variables; bit `i` is variable `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    width: usize,
    bits: u64,
}

impl Assignment {
    pub fn new(width: usize, bits: u64) -> Self {
        assert!(width <= MAX_VARS, "assignment width {width} exceeds {MAX_VARS}");
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        Assignment {
            width,
            bits: bits & mask,
        }
    }

    pub fn from_true_vars<I: IntoIterator<Item = usize>>(width: usize, vars: I) -> Self {
        Assignment::new(width, vars.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, var: usize) -> bool {
        self.bits >> var & 1 == 1
    }

    pub fn true_vars(&self) -> Vec<usize> {
        (0..self.width).filter(|&v| self.get(v)).collect()
    }
}

impl fmt::Display for Assignment {
    /// Bit string with variable 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.width {
            f.write_str(if self.get(v) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A conjunction of blocks over `m` labelled variables. No blocks means
/// constant true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    m: usize,
    labels: Vec<String>,
    blocks: Vec<Block>,
}

impl Formula {
    /// Variables get labels `x1..xm`.
    pub fn new(m: usize, blocks: Vec<Block>) -> Result<Self> {
        let labels = (1..=m).map(|i| format!("x{i}")).collect();
        Self::with_labels(labels, blocks)
    }

    pub fn with_labels(labels: Vec<String>, blocks: Vec<Block>) -> Result<Self> {
        let m = labels.len();
        if m > MAX_VARS {
            return Err(Error::TooLarge {
                what: "variable count",
                size: m,
                limit: MAX_VARS,
            });
        }
        let allowed = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        for b in &blocks {
            if let Some(c) = b.cubes.iter().find(|c| c.support() & !allowed != 0) {
                return Err(Error::Internal(format!(
                    "cube {} references a variable beyond m = {m}",
                    c.render(&labels)
                )));
            }
        }
        Ok(Formula { m, labels, blocks })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn cube_count(&self) -> usize {
        self.blocks.iter().map(|b| b.cubes.len()).sum()
    }

    pub fn has_constant_false_block(&self) -> bool {
        self.blocks.iter().any(Block::is_constant_false)
    }

    /// Conjunction with the blocks of `other`, which must share the variables.
    pub fn and(&self, other: &Formula) -> Result<Formula> {
        if other.m != self.m {
            return Err(Error::WidthMismatch {
                expected: self.m,
                got: other.m,
            });
        }
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        Ok(Formula {
            m: self.m,
            labels: self.labels.clone(),
            blocks,
        })
    }

    pub fn push_block(&mut self, block: Block) {
        self.blocks.push(block);
    }

    /// Sub-formula made of `blocks[range]`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Formula {
        Formula {
            m: self.m,
            labels: self.labels.clone(),
            blocks: self.blocks[range].to_vec(),
        }
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<bool> {
        if a.width() != self.m {
            return Err(Error::WidthMismatch {
                expected: self.m,
                got: a.width(),
            });
        }
        Ok(self.holds(a.bits()))
    }

    /// Evaluation on raw bits without the width check.
    #[inline]
    pub fn holds(&self, bits: u64) -> bool {
        self.blocks.iter().all(|b| b.holds(bits))
    }

    /// `(a & b | ~c) & (d)` style rendering with `~` for negation.
    pub fn render(&self) -> String {
        if self.blocks.is_empty() {
            return "true".to_string();
        }
        self.blocks
            .iter()
            .map(|b| b.render(&self.labels))
            .collect::<Vec<_>>()
            .join(" & ")
    }

    /// Juxtaposed rendering for single-letter labels, e.g. `(fg)(ad~f|a~df|~adf)`.
    pub fn render_compact(&self) -> String {
        self.blocks.iter().map(|b| b.render_compact(&self.labels)).collect()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &str) -> Vec<String> {
        names.chars().map(|c| c.to_string()).collect()
    }

    #[test]
    fn contrary_literals_rejected() {
        assert!(Cube::new([Literal::pos(0), Literal::neg(0)]).is_none());
        let c = Cube::new([Literal::neg(2), Literal::pos(0)]).unwrap();
        assert_eq!(c.literals().collect::<Vec<_>>(), vec![Literal::pos(0), Literal::neg(2)]);
        assert_eq!(c.render(&labels("abc")), "a & ~c");
    }

    #[test]
    fn absorption_and_conjunction() {
        let p = Cube::new([Literal::pos(0)]).unwrap();
        let pq = Cube::new([Literal::pos(0), Literal::pos(1)]).unwrap();
        let np = Cube::new([Literal::neg(0)]).unwrap();
        assert!(p.absorbs(&pq));
        assert!(!pq.absorbs(&p));
        assert!(p.and(&np).is_none());
        assert_eq!(p.and(&pq), Some(pq));
        assert!(Cube::TRUE.absorbs(&p));
    }

    #[test]
    fn evaluate_width_checked() {
        let f = Formula::new(2, vec![]).unwrap();
        assert_eq!(
            f.evaluate(&Assignment::new(3, 0)).unwrap_err(),
            Error::WidthMismatch { expected: 2, got: 3 }
        );
        assert!(f.evaluate(&Assignment::new(2, 0)).unwrap());
    }

    #[test]
    fn constant_false_block() {
        let f = Formula::new(1, vec![Block::new(vec![], Provenance::Other)]).unwrap();
        assert!(f.has_constant_false_block());
        assert!(!f.holds(0) && !f.holds(1));
        assert_eq!(f.render(), "(false)");
    }

    #[test]
    fn rejects_out_of_range_variables() {
        let c = Cube::new([Literal::pos(3)]).unwrap();
        assert!(Formula::new(2, vec![Block::new(vec![c], Provenance::Other)]).is_err());
    }

    #[test]
    fn blocks_deduplicate_cubes() {
        let p = Cube::new([Literal::pos(0)]).unwrap();
        let b = Block::new(vec![p, p], Provenance::Other);
        assert_eq!(b.cubes.len(), 1);
    }

    #[test]
    fn assignment_display_is_var_order() {
        let a = Assignment::from_true_vars(3, [0, 2]);
        assert_eq!(a.to_string(), "101");
        assert_eq!(a.true_vars(), vec![0, 2]);
    }

    #[test]
    fn canonical_cube_order() {
        let mut cubes = [Cube::new([Literal::neg(0), Literal::pos(1)]).unwrap(),
            Cube::new([Literal::pos(0), Literal::neg(1)]).unwrap(),
            Cube::new([Literal::pos(1)]).unwrap()];
        cubes.sort();
        let r: Vec<_> = cubes.iter().map(|c| c.render_compact(&labels("ab"))).collect();
        assert_eq!(r, ["b", "a~b", "~ab"]);
    }
}
