//! Homogeneous linear systems over `Z_p` for odd (not necessarily prime) `p`.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Upper bound on the number of candidate vectors enumerated by [`solve_homogeneous`].
pub const MAX_ENUMERATION: u64 = 1 << 24;

/// Multiplicative inverse of `a` modulo `p`, if `a` is a unit.
pub fn inverse(a: u64, p: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(p as i64));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(p as i64) as u64)
}

pub fn is_unit(a: u64, p: u64) -> bool {
    a.gcd(&p) == 1
}

/// All vectors `x ∈ Z_p^ncols` with `rows · x ≡ 0 (mod p)`, in lexicographic
/// order of the free coordinates.
///
/// Elimination only pivots on units. Columns without a unit pivot are
/// enumerated over all of `Z_p` and every candidate is checked against the
/// original rows, so the result is exact for composite `p` as well.
pub fn solve_homogeneous(rows: &[Vec<u64>], ncols: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x % p).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut free = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(r) = (rank..m.len()).find(|&r| is_unit(m[r][col], p)) else {
            free.push(col);
            continue;
        };
        m.swap(rank, r);
        let inv = inverse(m[rank][col], p).expect("unit pivot");
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p * p - f * y % p) % p;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }

    let total = (p as u128)
        .checked_pow(free.len() as u32)
        .unwrap_or(u128::MAX);
    if total > MAX_ENUMERATION as u128 {
        return Err(Error::RangeError(format!(
            "{total} candidate solutions exceed the enumeration limit"
        )));
    }

    let mut out = Vec::new();
    let mut assignment = vec![0u64; free.len()];
    loop {
        let mut x = vec![0u64; ncols];
        for (&c, &v) in free.iter().zip(&assignment) {
            x[c] = v;
        }
        for &(r, c) in &pivots {
            let s = free
                .iter()
                .map(|&f| m[r][f] * x[f] % p)
                .fold(0, |a, b| (a + b) % p);
            x[c] = (p - s) % p;
        }
        if rows.iter().all(|row| dot(row, &x, p) == 0) {
            out.push(x);
        }
        // odometer, last free coordinate fastest
        let mut k = assignment.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            assignment[k] += 1;
            if assignment[k] < p {
                break;
            }
            assignment[k] = 0;
        }
    }
}

fn dot(row: &[u64], x: &[u64], p: u64) -> u64 {
    row.iter()
        .zip(x)
        .map(|(&a, &b)| (a % p) * b % p)
        .fold(0, |a, b| (a + b) % p)
}
