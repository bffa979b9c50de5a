//! 3-CNF formulas and exhaustive (NAE-)satisfiability.

use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count the truth-table solvers accept.
pub const MAX_SOLVER_VARS: usize = 24;

/// A literal over a 1-based variable index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: u32,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Self {
        Self {
            var,
            positive: true,
        }
    }

    pub fn neg(var: u32) -> Self {
        Self {
            var,
            positive: false,
        }
    }

    /// Signed DIMACS form; zero is rejected.
    pub fn from_dimacs(lit: i64) -> Result<Self> {
        if lit == 0 || lit.unsigned_abs() > u32::MAX as u64 {
            return Err(Error::InvalidFormula(format!("bad literal {lit}")));
        }
        Ok(Self {
            var: lit.unsigned_abs() as u32,
            positive: lit > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn eval(self, assignment: &Assignment) -> bool {
        assignment.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "~x{}", self.var)
        }
    }
}

pub type Clause = [Literal; 3];

/// Clauses of exactly three literals over distinct variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cnf3Formula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl Cnf3Formula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for (r, lit) in clause.iter().enumerate() {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(Error::InvalidFormula(format!(
                        "clause {} uses x{} outside 1..={num_vars}",
                        j + 1,
                        lit.var
                    )));
                }
                if clause[..r].iter().any(|o| o.var == lit.var) {
                    return Err(Error::InvalidFormula(format!(
                        "clause {} repeats variable x{}",
                        j + 1,
                        lit.var
                    )));
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Builds from signed DIMACS triples.
    pub fn from_dimacs(num_vars: u32, clauses: &[[i64; 3]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                Ok([
                    Literal::from_dimacs(c[0])?,
                    Literal::from_dimacs(c[1])?,
                    Literal::from_dimacs(c[2])?,
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Number of clauses in which each variable occurs (index `i - 1`).
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_vars as usize];
        for clause in &self.clauses {
            for lit in clause {
                counts[lit.var as usize - 1] += 1;
            }
        }
        counts
    }

    /// Errors with the first variable that never occurs.
    pub fn require_all_used(&self) -> Result<()> {
        match self.occurrence_counts().iter().position(|&c| c == 0) {
            Some(i) => Err(Error::UnusedVariable(i as u32 + 1)),
            None => Ok(()),
        }
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(a)))
    }

    /// Every clause has a true and a false literal.
    pub fn is_nae_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| l.eval(a)).count();
            t == 1 || t == 2
        })
    }

    fn check_assignment(&self, a: &Assignment) -> Result<()> {
        if a.len() != self.num_vars as usize {
            return Err(Error::InvalidParameter(format!(
                "assignment covers {} variables, formula has {}",
                a.len(),
                self.num_vars
            )));
        }
        Ok(())
    }

    pub(crate) fn require_nae(&self, a: &Assignment) -> Result<()> {
        self.check_assignment(a)?;
        if self.is_nae_satisfied_by(a) {
            Ok(())
        } else {
            Err(Error::UnsatisfyingAssignment(format!(
                "{a} is not a not-all-equal assignment"
            )))
        }
    }

    pub(crate) fn require_sat(&self, a: &Assignment) -> Result<()> {
        self.check_assignment(a)?;
        if self.is_satisfied_by(a) {
            Ok(())
        } else {
            Err(Error::UnsatisfyingAssignment(format!(
                "{a} falsifies a clause"
            )))
        }
    }
}

impl fmt::Display for Cnf3Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.clauses.iter().enumerate() {
            if j > 0 {
                write!(f, " & ")?;
            }
            write!(f, "({} | {} | {})", c[0], c[1], c[2])?;
        }
        Ok(())
    }
}

/// A total truth assignment; `value(i)` is the value of `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Self(values)
    }

    /// Bit `i` of `mask` is the value of `x_{i+1}`.
    pub fn from_mask(num_vars: usize, mask: u64) -> Self {
        Self((0..num_vars).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn value(&self, var: u32) -> bool {
        self.0[var as usize - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|v| !v).collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            write!(f, "{}", if v { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

fn exhaustive(
    phi: &Cnf3Formula,
    accept: impl Fn(&Assignment) -> bool,
) -> Result<Option<Assignment>> {
    let n = phi.num_vars() as usize;
    if n > MAX_SOLVER_VARS {
        return Err(Error::Capacity {
            what: "variables",
            got: n,
            bound: MAX_SOLVER_VARS,
        });
    }
    Ok((0..1u64 << n)
        .map(|mask| Assignment::from_mask(n, mask))
        .find(|a| accept(a)))
}

/// First NAE-satisfying assignment in truth-table order.
pub fn nae3sat_solve(phi: &Cnf3Formula) -> Result<Option<Assignment>> {
    exhaustive(phi, |a| phi.is_nae_satisfied_by(a))
}

/// First satisfying assignment in truth-table order.
pub fn sat3_solve(phi: &Cnf3Formula) -> Result<Option<Assignment>> {
    exhaustive(phi, |a| phi.is_satisfied_by(a))
}
