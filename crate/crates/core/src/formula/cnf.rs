//! Tseitin-style CNF export and DIMACS text I/O.

use std::fmt::Write as _;

use super::{Assignment, Formula};
use crate::error::{Error, Result};

/// A CNF over the formula's variables (numbered `1..=m`) followed by one
/// auxiliary variable per cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    pub num_vars: usize,
    /// DIMACS literals: `k` is variable `k` true, `-k` false.
    pub clauses: Vec<Vec<i64>>,
    /// Formula variable `i` is CNF variable `edge_var_map[i]`.
    pub edge_var_map: Vec<usize>,
    pub edge_labels: Vec<String>,
}

impl CnfInstance {
    pub fn edge_count(&self) -> usize {
        self.edge_var_map.len()
    }

    /// Formula variable index for a CNF variable, if it is not auxiliary.
    pub fn var_to_edge(&self, var: usize) -> Option<usize> {
        self.edge_var_map.iter().position(|&v| v == var)
    }
}

/// Equisatisfiable CNF of `f`. For each cube with literals `l1..lk` and
/// auxiliary `x`: clauses `(~x | li)` and `(x | ~l1 | ... | ~lk)`; for each
/// block a clause over its auxiliaries. A constant-false block becomes the
/// empty clause.
pub fn tseitin_cnf(f: &Formula) -> CnfInstance {
    let m = f.m();
    let dimacs = |var: usize, positive: bool| {
        let v = (var + 1) as i64;
        if positive {
            v
        } else {
            -v
        }
    };
    let mut next_aux = m + 1;
    let mut clauses = Vec::new();
    for block in f.blocks() {
        let mut block_clause = Vec::with_capacity(block.cubes.len());
        for cube in &block.cubes {
            let aux = next_aux as i64;
            next_aux += 1;
            let mut back = vec![aux];
            for lit in cube.literals() {
                clauses.push(vec![-aux, dimacs(lit.var, lit.positive)]);
                back.push(dimacs(lit.var, !lit.positive));
            }
            clauses.push(back);
            block_clause.push(aux);
        }
        clauses.push(block_clause);
    }
    CnfInstance {
        num_vars: next_aux - 1,
        clauses,
        edge_var_map: (1..=m).collect(),
        edge_labels: f.labels().to_vec(),
    }
}

/// DIMACS CNF text: `c edge <label> -> var <k>` comments, the `p cnf` header,
/// then one `0`-terminated clause per line.
pub fn write_dimacs(c: &CnfInstance) -> String {
    let mut out = String::new();
    for (label, var) in c.edge_labels.iter().zip(&c.edge_var_map) {
        let _ = writeln!(out, "c edge {label} -> var {var}");
    }
    let _ = writeln!(out, "p cnf {} {}", c.num_vars, c.clauses.len());
    for clause in &c.clauses {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Reads the DIMACS header and clauses back; comment lines are ignored.
pub fn parse_dimacs(text: &str) -> Result<(usize, Vec<Vec<i64>>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let bad = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| bad(format!("bad variable count {v:?}")))?;
                    let c = c.parse().map_err(|_| bad(format!("bad clause count {c:?}")))?;
                    header = Some((v, c));
                }
                _ => return Err(bad("malformed problem line".into())),
            }
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| bad("clause before `p cnf` header".into()))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| bad(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > num_vars {
                return Err(bad(format!("literal {lit} exceeds {num_vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, count) = header.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `p cnf` header".into(),
    })?;
    if !current.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != count {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {count} clauses, found {}", clauses.len()),
        });
    }
    Ok((num_vars, clauses))
}

/// Projects a solver model (`v` lines or bare signed integers, optionally
/// `0`-terminated) onto the formula variables of `c`. Auxiliary variables are
/// ignored but must be in range; every formula variable must be assigned.
pub fn parse_dimacs_model(text: &str, c: &CnfInstance) -> Result<Assignment> {
    let mut values: Vec<Option<bool>> = vec![None; c.num_vars + 1];
    let mut terminated = false;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('s') {
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            if terminated {
                return Err(Error::ModelParse(format!("value {tok:?} after terminating 0")));
            }
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::ModelParse(format!("bad token {tok:?}")))?;
            if lit == 0 {
                terminated = true;
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > c.num_vars {
                return Err(Error::VarOutOfRange {
                    var: lit,
                    num_vars: c.num_vars,
                });
            }
            match values[var] {
                Some(prev) if prev != (lit > 0) => {
                    return Err(Error::ModelParse(format!("variable {var} assigned both ways")))
                }
                _ => values[var] = Some(lit > 0),
            }
        }
    }
    let mut bits = 0u64;
    for (edge, &var) in c.edge_var_map.iter().enumerate() {
        match values[var] {
            Some(true) => bits |= 1u64 << edge,
            Some(false) => {}
            None => {
                return Err(Error::ModelParse(format!(
                    "incomplete model: variable {var} ({}) unassigned",
                    c.edge_labels[edge]
                )))
            }
        }
    }
    Ok(Assignment::new(c.edge_count(), bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Block, Cube, Literal, Provenance};

    fn instance(num_vars: usize, clauses: Vec<Vec<i64>>, edges: usize) -> CnfInstance {
        CnfInstance {
            num_vars,
            clauses,
            edge_var_map: (1..=edges).collect(),
            edge_labels: (0..edges).map(|i| format!("e{i}")).collect(),
        }
    }

    #[test]
    fn empty_instance_dimacs() {
        assert_eq!(write_dimacs(&instance(0, vec![], 0)), "p cnf 0 0\n");
    }

    #[test]
    fn clause_line_format() {
        let text = write_dimacs(&instance(2, vec![vec![1, -2]], 2));
        assert_eq!(text, "c edge e0 -> var 1\nc edge e1 -> var 2\np cnf 2 1\n1 -2 0\n");
        assert_eq!(parse_dimacs(&text).unwrap(), (2, vec![vec![1, -2]]));
    }

    #[test]
    fn constant_false_block_gives_empty_clause() {
        let f = Formula::new(1, vec![Block::new(vec![], Provenance::Other)]).unwrap();
        let cnf = tseitin_cnf(&f);
        assert!(cnf.clauses.contains(&vec![]));
        assert!(write_dimacs(&cnf).ends_with("\n0\n"));
    }

    #[test]
    fn aux_vars_follow_edge_vars() {
        let c = Cube::new([Literal::pos(0), Literal::neg(1)]).unwrap();
        let f = Formula::new(2, vec![Block::new(vec![c], Provenance::Other)]).unwrap();
        let cnf = tseitin_cnf(&f);
        assert_eq!(cnf.num_vars, 3);
        assert_eq!(
            cnf.clauses,
            vec![vec![-3, 1], vec![-3, -2], vec![3, -1, 2], vec![3]]
        );
    }

    #[test]
    fn model_parsing() {
        let cnf = instance(4, vec![], 3);
        let a = parse_dimacs_model("s SATISFIABLE\nv 1 -2 3 0\n", &cnf).unwrap();
        assert_eq!(a.to_string(), "101");
        let raw = parse_dimacs_model("1 -2\n3 -4", &cnf).unwrap();
        assert_eq!(raw, a);
        assert!(matches!(
            parse_dimacs_model("v 4 0", &cnf).unwrap_err(),
            Error::ModelParse(_)
        ));
        assert!(matches!(
            parse_dimacs_model("v 1 2 3 9 0", &cnf).unwrap_err(),
            Error::VarOutOfRange { var: 9, .. }
        ));
        assert!(matches!(
            parse_dimacs_model("v 1 x 0", &cnf).unwrap_err(),
            Error::ModelParse(_)
        ));
    }

    #[test]
    fn dimacs_parse_errors() {
        assert!(parse_dimacs("1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2\n").is_err());
    }
}
