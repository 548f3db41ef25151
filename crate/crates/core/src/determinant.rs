//! Minors of polynomial matrices by Laplace expansion with memoization over
//! column subsets.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::HashMap;

/// Budget on the number of minors expanded in one call.
pub const MINOR_BUDGET: usize = 500_000;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of the submatrix on `rows` and the columns in the bitmask `cols`,
/// expanding along the last row.
fn minor(
    m: &[Vec<Polynomial>],
    rows: &[usize],
    cols: u64,
    memo: &mut HashMap<(usize, u64), Polynomial>,
    ring: &PolyRing,
) -> Result<Polynomial> {
    let t = rows.len();
    if t == 0 {
        return Ok(Polynomial::one(ring));
    }
    if let Some(p) = memo.get(&(t, cols)) {
        return Ok(p.clone());
    }
    let r = rows[t - 1];
    let mut acc = Polynomial::zero(ring);
    let mut j = 0;
    let mut bits = cols;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let e = &m[r][c];
        if !e.is_zero() {
            let sub = minor(m, &rows[..t - 1], cols & !(1u64 << c), memo, ring)?;
            if !sub.is_zero() {
                let term = e.checked_mul(&sub)?;
                // sign (-1)^(t-1 + j) for the j-th selected column
                acc = if (t - 1 + j) % 2 == 0 {
                    acc.checked_add(&term)?
                } else {
                    acc.checked_sub(&term)?
                };
            }
        }
        j += 1;
    }
    memo.insert((t, cols), acc.clone());
    Ok(acc)
}

/// All nonzero `k x k` minors of a matrix given by rows.
pub fn all_minors(ring: &PolyRing, m: &[Vec<Polynomial>], k: usize) -> Result<Vec<Polynomial>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    if k == 0 {
        return Ok(vec![Polynomial::one(ring)]);
    }
    if k > nrows || k > ncols {
        return Ok(Vec::new());
    }
    if ncols > 64 {
        return Err(Error::Precondition(format!("{ncols} columns, at most 64 supported")));
    }
    let count = binom(nrows, k).saturating_mul(binom(ncols, k));
    if count > MINOR_BUDGET {
        return Err(Error::IterationCap {
            stage: "minor expansion".into(),
            cap: MINOR_BUDGET,
        });
    }
    let mut out = Vec::new();
    let col_sets = subsets(ncols, k);
    for rows in subsets(nrows, k) {
        // memo entries depend on the row prefix, so it is per row set
        let mut memo = HashMap::new();
        for cs in &col_sets {
            let mask = cs.iter().fold(0u64, |a, &c| a | (1 << c));
            let d = minor(m, &rows, mask, &mut memo, ring)?;
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Determinant of a square polynomial matrix.
pub fn determinant(ring: &PolyRing, m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("matrix is not square".into()));
    }
    let mut memo = HashMap::new();
    let rows: Vec<usize> = (0..n).collect();
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    minor(m, &rows, mask, &mut memo, ring)
}
