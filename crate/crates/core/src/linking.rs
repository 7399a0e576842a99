//! Linking numbers between the branch curves and the dihedral linking
//! invariant.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_traits::Zero;

use crate::chains::{self, integer, ChainSolution, Rational};
use crate::coloring::Coloring;
use crate::cover::{CoefficientTable, ConfigurationDiagram};
use crate::error::{Error, Result};
use crate::knot::OrientedDiagram;

/// A rational linking number, or `∞` when a curve is not rationally
/// null-homologous.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinite,
}

impl ExtendedRational {
    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Self::Finite(r) => Some(r),
            Self::Infinite => None,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::Finite(integer(v))
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        Self::Finite(r)
    }
}

/// Finite values in numeric order, `∞` after all of them.
impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.cmp(b),
            (Self::Finite(_), Self::Infinite) => Ordering::Less,
            (Self::Infinite, Self::Finite(_)) => Ordering::Greater,
            (Self::Infinite, Self::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for ExtendedRational {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            Self::Finite(r) => Self::Finite(-r),
            Self::Infinite => Self::Infinite,
        }
    }
}

/// `"a/b"`, `"a"` when the denominator is 1, `"inf"` for `∞`.
impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(r) => write!(f, "{r}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "inf" | "∞" | "Infinity" | "infinity" => Ok(Self::Infinite),
            _ => s
                .parse::<Rational>()
                .map(Self::Finite)
                .map_err(|_| Error::BadToken(s.to_string())),
        }
    }
}

pub fn join(values: &[ExtendedRational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// `Int(i,j,k) = ε_a(i,j)·x_{o(i)}^{k,a(i,j)} - C_a(i,j,k)`, the signed
/// intersection of the push-off of `k_i^j ∪ k_{i+1}^j` with `Σ^k`. The first
/// term is 0 when `a(i,j) = 0`.
pub fn int_term(
    t: &CoefficientTable,
    i: usize,
    j: usize,
    k: usize,
    x: &ChainSolution,
) -> Result<Rational> {
    if !x.is_solvable() {
        return Err(Error::NotSolvable(k));
    }
    let cc = t.coefficients(i, j, k);
    let mut v = integer(-(cc.c_a as i64));
    if cc.a != 0 && cc.eps_a != 0 {
        let xv = x.value(t.over(i), cc.a).expect("solvable");
        if cc.eps_a > 0 {
            v += xv;
        } else {
            v -= xv;
        }
    }
    Ok(v)
}

fn int_sum(t: &CoefficientTable, j: usize, k: usize, x: &ChainSolution) -> Result<Rational> {
    (0..t.n()).try_fold(
        Rational::zero(),
        |acc, i| Ok(acc + int_term(t, i, j, k, x)?),
    )
}

/// `lk(K^j, K^k)`. Returns `∞` if either curve has no bounding chain; for
/// `j ≠ k` the value is also computed as `lk(K^k, K^j)` and both must agree.
pub fn lk_pair(
    t: &CoefficientTable,
    j: usize,
    k: usize,
    solutions: &[ChainSolution],
) -> Result<ExtendedRational> {
    let (sj, sk) = (&solutions[j], &solutions[k]);
    if !sj.is_solvable() || !sk.is_solvable() {
        return Ok(ExtendedRational::Infinite);
    }
    let forward = int_sum(t, j, k, sk)?;
    if j != k {
        let backward = int_sum(t, k, j, sj)?;
        if forward != backward {
            return Err(Error::SymmetryViolation {
                j,
                k,
                forward: forward.to_string(),
                backward: backward.to_string(),
            });
        }
    }
    Ok(ExtendedRational::Finite(forward))
}

/// Solves the chain system of every component `0..=q`.
pub fn solve_components(t: &CoefficientTable) -> Vec<ChainSolution> {
    (0..=t.q())
        .map(|k| chains::solve(&chains::assemble(t, k)))
        .collect()
}

/// The `(q+1)×(q+1)` linking matrix and the dihedral linking invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlnResult {
    pub p: u32,
    pub q: usize,
    /// Entry `(j, k)` is `lk(K^j, K^k)`. The diagonal holds self-linking
    /// numbers relative to the lifted blackboard framing; they depend on the
    /// diagram and are not part of the invariant.
    pub matrix: Vec<Vec<ExtendedRational>>,
    /// Off-diagonal entries over unordered pairs, ascending, `∞` last.
    pub multiset: Vec<ExtendedRational>,
}

impl DlnResult {
    pub fn entry(&self, j: usize, k: usize) -> &ExtendedRational {
        &self.matrix[j][k]
    }

    pub fn multiset_string(&self) -> String {
        join(&self.multiset)
    }

    pub fn matrix_strings(&self) -> Vec<Vec<String>> {
        self.matrix
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }
}

/// Fills the linking matrix from already solved component systems.
#[allow(clippy::needless_range_loop)]
pub fn matrix_from_solutions(
    t: &CoefficientTable,
    solutions: &[ChainSolution],
) -> Result<DlnResult> {
    let q = t.q();
    let mut matrix = vec![vec![ExtendedRational::Infinite; q + 1]; q + 1];
    let mut multiset = Vec::with_capacity(q * (q + 1) / 2);
    for j in 0..=q {
        for k in j..=q {
            let v = lk_pair(t, j, k, solutions)?;
            if j != k {
                matrix[k][j] = v.clone();
                multiset.push(v.clone());
            }
            matrix[j][k] = v;
        }
    }
    multiset.sort();
    Ok(DlnResult {
        p: 2 * q as u32 + 1,
        q,
        matrix,
        multiset,
    })
}

/// DLN for a given configuration diagram.
pub fn dln_with_configuration(
    d: &OrientedDiagram,
    cfg: &ConfigurationDiagram,
) -> Result<DlnResult> {
    let t = CoefficientTable::new(cfg, d);
    matrix_from_solutions(&t, &solve_components(&t))
}

/// DLN of a colored diagram, using the standard arc-0 configuration.
pub fn dln(d: &OrientedDiagram, col: &Coloring) -> Result<DlnResult> {
    dln_with_configuration(d, &ConfigurationDiagram::build(d, col))
}
