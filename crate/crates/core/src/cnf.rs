//! 3-CNF formulas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// DIMACS-style signed integer.
    pub fn from_signed(x: i64) -> Option<Self> {
        match x {
            0 => None,
            x if x > 0 => Some(Literal::pos(x as usize)),
            x => Some(Literal::neg(x.unsigned_abs() as usize)),
        }
    }

    pub fn to_signed(self) -> i64 {
        if self.negated {
            -(self.var as i64)
        } else {
            self.var as i64
        }
    }

    /// Value under an assignment indexed by `var - 1`.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] != self.negated
    }
}

pub type Clause = [Literal; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            for lit in c {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(Error::input(format!(
                        "clause {} uses variable {} outside 1..={num_vars}",
                        i + 1,
                        lit.var
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Accepts clause rows of any width and rejects those that are not exactly three wide.
    pub fn from_signed(num_vars: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let clauses = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let lits: Vec<Literal> = row.iter().filter_map(|&x| Literal::from_signed(x)).collect();
                <[Literal; 3]>::try_from(lits).map_err(|l| {
                    Error::input(format!(
                        "clause {} has {} literals; exactly 3 are required",
                        i + 1,
                        l.len()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CnfFormula::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// First satisfying assignment in binary-counting order (x1 is the low bit),
    /// found by enumeration. Intended for small formulas only.
    pub fn brute_force_satisfy(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 30, "brute-force SAT limited to fewer than 30 variables");
        (0u64..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|j| bits >> j & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.eval(a))
    }

    /// Whether every clause mentions three different variables.
    pub fn has_distinct_variables(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var)
    }

    /// All eight sign patterns over x1, x2, x3; unsatisfiable.
    pub fn complete_polarity_3() -> Self {
        let clauses = (0..8u8)
            .map(|bits| {
                [1, 2, 3].map(|v| Literal {
                    var: v,
                    negated: bits >> (v - 1) & 1 == 1,
                })
            })
            .collect();
        CnfFormula::new(3, clauses).expect("valid formula")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_polarity_is_unsat() {
        let f = CnfFormula::complete_polarity_3();
        assert_eq!(f.num_clauses(), 8);
        assert!(f.brute_force_satisfy().is_none());
    }

    #[test]
    fn width_rule() {
        assert!(CnfFormula::from_signed(3, &[vec![1, 2, 3]]).is_ok());
        assert!(matches!(
            CnfFormula::from_signed(2, &[vec![1, -2]]),
            Err(Error::Input(_))
        ));
        let dup = CnfFormula::from_signed(1, &[vec![1, 1, -1]]).unwrap();
        assert!(!dup.has_distinct_variables());
        assert!(dup.brute_force_satisfy().is_some());
    }
}
