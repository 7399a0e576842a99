//! Rational 2-chains bounding the branch curves.
//!
//! For component `k` the unknowns are `x_i^{k,j}` (`i < n`, `1 ≤ j ≤ q`), the
//! coefficients of `R_i^j - L_i^j` in the chain `Σ^k`. Each pair `(i, j)`
//! contributes the equation
//!
//! ```text
//! x_i^{k,j} - x_{i+1}^{k,j} - ε_a(i,j)·x_{o(i)}^{k,a(i,j)} - ε_b(i,j)·x_{o(i)}^{k,b(i,j)}
//!     + C_a(i,j,k) + C_b(i,j,k) = 0
//! ```
//!
//! where terms on the index-1 lift (`a` or `b` equal to 0) are dropped.
//! `K^k` is rationally null-homologous iff the system is consistent.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cover::CoefficientTable;
use crate::error::{Error, Result};

/// Exact rational with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The integer system `A·x + C = 0` for one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    n: usize,
    q: usize,
    k: usize,
    matrix: Vec<Vec<i64>>,
    constants: Vec<i64>,
}

impl LinearSystem {
    /// Row and column index of `(i, j)`, `j ≥ 1`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.q);
        i * self.q + (j - 1)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.n * self.q
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `C(i,j,k) = C_a + C_b` per row.
    pub fn constants(&self) -> &[i64] {
        &self.constants
    }

    /// Right-hand side `-C` of `A·x = -C`.
    pub fn rhs(&self) -> Vec<i64> {
        self.constants.iter().map(|c| -c).collect()
    }
}

/// Augmented matrix, unknown columns then the constant column.
impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, c) in self.matrix.iter().zip(&self.constants) {
            for v in row {
                write!(f, "{v:>3}")?;
            }
            writeln!(f, " | {:>2}", -c)?;
        }
        Ok(())
    }
}

/// Builds the system for component `k ∈ 0..=q`.
pub fn assemble(t: &CoefficientTable, k: usize) -> LinearSystem {
    let n = t.n();
    let q = t.q();
    assert!(k <= q, "component {k} out of range 0..={q}");
    let dim = n * q;
    let mut sys = LinearSystem {
        n,
        q,
        k,
        matrix: vec![vec![0; dim]; dim],
        constants: vec![0; dim],
    };
    for i in 0..n {
        let s = t.over(i);
        for j in 1..=q {
            let row = sys.index(i, j);
            let cc = t.coefficients(i, j, k);
            let cols = [(sys.index(i, j), 1), (sys.index((i + 1) % n, j), -1)];
            for (col, v) in cols {
                sys.matrix[row][col] += v;
            }
            if cc.a != 0 {
                let col = sys.index(s, cc.a);
                sys.matrix[row][col] -= cc.eps_a as i64;
            }
            if cc.b != 0 {
                let col = sys.index(s, cc.b);
                sys.matrix[row][col] -= cc.eps_b as i64;
            }
            sys.constants[row] = (cc.c_a + cc.c_b) as i64;
        }
    }
    sys
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Solvable,
    NotNullHomologous,
}

/// Result of solving one component's system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSolution {
    pub k: usize,
    pub q: usize,
    pub status: SolveStatus,
    /// Particular solution with all free variables zero, when consistent.
    pub x: Option<Vec<Rational>>,
    /// Basis of the solutions of the homogeneous system.
    pub nullspace: Vec<Vec<Rational>>,
}

impl ChainSolution {
    pub fn is_solvable(&self) -> bool {
        self.status == SolveStatus::Solvable
    }

    /// `x_i^{k,j}` for `j ≥ 1`.
    pub fn value(&self, i: usize, j: usize) -> Option<&Rational> {
        self.x.as_ref().map(|x| &x[i * self.q + (j - 1)])
    }

    /// Another solution: the particular one plus `Σ coeffs[m]·nullspace[m]`.
    pub fn shifted(&self, coeffs: &[Rational]) -> Self {
        let mut out = self.clone();
        if let Some(x) = out.x.as_mut() {
            for (c, v) in coeffs.iter().zip(&self.nullspace) {
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi += c * vi;
                }
            }
        }
        out
    }
}

/// Exact Gauss-Jordan elimination over `Q`.
pub fn solve(sys: &LinearSystem) -> ChainSolution {
    let dim = sys.dim();
    let mut m: Vec<Vec<Rational>> = sys
        .matrix
        .iter()
        .zip(sys.rhs())
        .map(|(row, r)| {
            row.iter()
                .map(|&v| integer(v))
                .chain(std::iter::once(integer(r)))
                .collect()
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..dim {
        let Some(r) = (rank..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, r);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }

    let consistent = m[rank..].iter().all(|row| row[dim].is_zero());
    let is_pivot = {
        let mut v = vec![false; dim];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let nullspace = (0..dim)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); dim];
            v[free] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect();

    let x = consistent.then(|| {
        let mut x = vec![Rational::zero(); dim];
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = m[r][dim].clone();
        }
        x
    });
    ChainSolution {
        k: sys.k,
        q: sys.q,
        status: if consistent {
            SolveStatus::Solvable
        } else {
            SolveStatus::NotNullHomologous
        },
        x,
        nullspace,
    }
}

/// `A·x + C`, evaluated exactly. Zero iff `x` solves the system.
pub fn residual(sys: &LinearSystem, x: &[Rational]) -> Result<Vec<Rational>> {
    if x.len() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            got: x.len(),
        });
    }
    Ok(sys
        .matrix
        .iter()
        .zip(&sys.constants)
        .map(|(row, &c)| {
            row.iter()
                .zip(x)
                .filter(|(&a, _)| a != 0)
                .fold(integer(c), |acc, (&a, xi)| acc + xi * BigInt::from(a))
        })
        .collect())
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Largest absolute value among the denominators, handy for diagnostics.
pub fn max_denominator(x: &[Rational]) -> BigInt {
    x.iter()
        .map(|v| v.denom().abs())
        .max()
        .unwrap_or_else(BigInt::one)
}
