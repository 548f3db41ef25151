//! Gaussian elimination over F_p on sparse rows keyed by arbitrary ordered columns.

use crate::field::PrimeField;
use std::collections::BTreeMap;

/// Incremental row echelon form. Rows are sorted by decreasing key; a row's
/// pivot is its largest key.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Copy> {
    field: PrimeField,
    rows: Vec<Vec<(K, u32)>>,
    pivots: BTreeMap<K, usize>,
}

fn normalize<K: Ord + Copy>(field: &PrimeField, mut row: Vec<(K, u32)>) -> Vec<(K, u32)> {
    row.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(K, u32)> = Vec::with_capacity(row.len());
    for (k, v) in row {
        match out.last_mut() {
            Some(l) if l.0 == k => l.1 = field.add(l.1, v),
            _ => out.push((k, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// `a - c * b` for rows sorted by decreasing key.
fn axpy<K: Ord + Copy>(field: &PrimeField, a: &[(K, u32)], c: u32, b: &[(K, u32)]) -> Vec<(K, u32)> {
    let nc = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            std::cmp::Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0, field.mul(nc, b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = field.add(a[i].1, field.mul(nc, b[j].1));
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl<K: Ord + Copy> SparseEchelon<K> {
    pub fn new(field: &PrimeField) -> Self {
        SparseEchelon {
            field: *field,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces a row against the stored rows. The result has no pivot keys.
    pub fn reduce(&self, row: Vec<(K, u32)>) -> Vec<(K, u32)> {
        let mut row = normalize(&self.field, row);
        let mut pos = 0;
        while pos < row.len() {
            let (k, v) = row[pos];
            match self.pivots.get(&k) {
                Some(&r) => {
                    // stored rows are monic
                    let tail = axpy(&self.field, &row[pos..], v, &self.rows[r]);
                    row.truncate(pos);
                    row.extend(tail);
                }
                None => pos += 1,
            }
        }
        row
    }

    pub fn contains(&self, row: Vec<(K, u32)>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns true if the rank grew.
    pub fn insert(&mut self, row: Vec<(K, u32)>) -> bool {
        let mut r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = self.field.inv(r[0].1);
        for e in r.iter_mut() {
            e.1 = self.field.mul(e.1, inv);
        }
        self.pivots.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn rows(&self) -> &[Vec<(K, u32)>] {
        &self.rows
    }

    pub fn pivot_keys(&self) -> Vec<K> {
        self.pivots.keys().copied().collect()
    }
}

/// Rank of a dense matrix (rows of equal length).
pub fn rank(field: &PrimeField, rows: &[Vec<u32>]) -> usize {
    let mut e = SparseEchelon::new(field);
    for r in rows {
        e.insert(
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i, v))
                .collect(),
        );
    }
    e.rank()
}

/// Determinant of a square dense matrix.
pub fn determinant(field: &PrimeField, m: &[Vec<u32>]) -> u32 {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m.to_vec();
    let mut det = 1u32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = field.neg(det);
        }
        det = field.mul(det, a[col][col]);
        let inv = field.inv(a[col][col]);
        for r in col + 1..n {
            if a[r][col] != 0 {
                let f = field.mul(a[r][col], inv);
                for c in col..n {
                    let v = field.mul(f, a[col][c]);
                    a[r][c] = field.sub(a[r][c], v);
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_rank_and_membership() {
        let f = PrimeField::new(7).unwrap();
        let mut e = SparseEchelon::new(&f);
        assert!(e.insert(vec![(2, 1), (1, 1)]));
        assert!(e.insert(vec![(1, 1), (0, 1)]));
        assert!(!e.insert(vec![(2, 1), (0, 6)]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(vec![(2, 2), (1, 3), (0, 1)]));
    }

    #[test]
    fn dense_rank_and_det() {
        let f = PrimeField::new(101).unwrap();
        let m = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(rank(&f, &m), 2);
        assert_eq!(determinant(&f, &m), f.from_i64(-2));
        assert_eq!(rank(&f, &[vec![1, 2], vec![2, 4]]), 1);
    }
}
