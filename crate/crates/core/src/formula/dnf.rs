//! Expansion of a block conjunction into an absorbed disjunction of cubes.

use super::{Cube, Formula};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_CUBES: usize = 1_000_000;

/// Multiplies out the blocks of `f` one at a time. Contradictory products are
/// dropped and absorption is applied after every block, so the result is the
/// set of minimal cubes, canonically sorted. An empty result means `f` is
/// unsatisfiable; `[Cube::TRUE]` means it is a tautology.
pub fn expand_to_dnf(f: &Formula, max_cubes: usize) -> Result<Vec<Cube>> {
    let mut acc = vec![Cube::TRUE];
    for block in f.blocks() {
        let mut next = Vec::with_capacity(acc.len() * block.cubes.len().max(1));
        for left in &acc {
            for right in &block.cubes {
                if let Some(product) = left.and(right) {
                    if next.len() == max_cubes {
                        return Err(Error::ExpansionOverflow { limit: max_cubes });
                    }
                    next.push(product);
                }
            }
        }
        acc = absorb(next);
        if acc.is_empty() {
            break;
        }
    }
    acc.sort();
    Ok(acc)
}

/// Removes duplicates and every cube that contains another cube's literals.
pub fn absorb(mut cubes: Vec<Cube>) -> Vec<Cube> {
    cubes.sort_by_key(|c| c.len());
    cubes.dedup();
    let mut kept: Vec<Cube> = Vec::with_capacity(cubes.len());
    for c in cubes {
        if !kept.iter().any(|k| k.absorbs(&c)) {
            kept.push(c);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Block, Literal, Provenance};

    fn cube(lits: &[(usize, bool)]) -> Cube {
        Cube::new(lits.iter().map(|&(var, positive)| Literal { var, positive })).unwrap()
    }

    #[test]
    fn absorption_keeps_shorter_cube() {
        let p = cube(&[(0, true)]);
        let q = cube(&[(1, true)]);
        let f = Formula::new(
            2,
            vec![
                Block::new(vec![p, q], Provenance::Other),
                Block::new(vec![p], Provenance::Other),
            ],
        )
        .unwrap();
        assert_eq!(expand_to_dnf(&f, DEFAULT_MAX_CUBES).unwrap(), vec![p]);
    }

    #[test]
    fn contradiction_gives_empty_disjunction() {
        let f = Formula::new(
            1,
            vec![
                Block::new(vec![cube(&[(0, true)])], Provenance::Other),
                Block::new(vec![cube(&[(0, false)])], Provenance::Other),
            ],
        )
        .unwrap();
        assert!(expand_to_dnf(&f, DEFAULT_MAX_CUBES).unwrap().is_empty());
    }

    #[test]
    fn empty_formula_is_true() {
        let f = Formula::new(3, vec![]).unwrap();
        assert_eq!(expand_to_dnf(&f, DEFAULT_MAX_CUBES).unwrap(), vec![Cube::TRUE]);
    }

    #[test]
    fn overflow_reported() {
        let blocks = (0..4)
            .map(|i| Block::new(vec![cube(&[(2 * i, true)]), cube(&[(2 * i + 1, true)])], Provenance::Other))
            .collect();
        let f = Formula::new(8, blocks).unwrap();
        assert_eq!(
            expand_to_dnf(&f, 10).unwrap_err(),
            Error::ExpansionOverflow { limit: 10 }
        );
        assert_eq!(expand_to_dnf(&f, 16).unwrap().len(), 16);
    }
}
