//! Polynomial rings and monomial orders.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MAX_VARS};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Degree budget for Groebner computations: `BLOWUP_DEGREE_CAP` if set, else 64.
/// Values above 255 are clamped since exponents are stored in a byte.
pub fn default_degree_cap() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("BLOWUP_DEGREE_CAP")
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .map(|c| c.clamp(1, 255))
            .unwrap_or(DEFAULT_DEGREE_CAP)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Standard degree, then reverse lexicographic.
    GRevLex,
    Lex,
    /// Product order: the first `k` variables are compared first (weighted degree,
    /// then revlex), then the rest the same way.
    BlockElimination(usize),
    /// Weighted degree, then reverse lexicographic.
    WeightedGRevLex,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
    field: PrimeField,
    degree_cap: u32,
    all_unit_weights: bool,
}

/// A polynomial ring over a prime field. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] {:?}",
            self.0.field.characteristic(),
            self.0.names.join(","),
            self.0.order
        )
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(names: Vec<String>, weights: Vec<u32>, order: MonomialOrder, field: PrimeField) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables, at most {MAX_VARS} supported",
                names.len()
            )));
        }
        if weights.len() != names.len() {
            return Err(Error::InvalidRing(format!(
                "{} weights for {} variables",
                weights.len(),
                names.len()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let MonomialOrder::BlockElimination(k) = order {
            if k > names.len() {
                return Err(Error::InvalidRing(format!(
                    "block size {k} exceeds {} variables",
                    names.len()
                )));
            }
        }
        let all_unit_weights = weights.iter().all(|&w| w == 1);
        Ok(PolyRing(Arc::new(RingData {
            names,
            weights,
            order,
            field,
            degree_cap: default_degree_cap(),
            all_unit_weights,
        })))
    }

    /// Standard graded ring with grevlex order.
    pub fn standard<S: AsRef<str>>(names: &[S], field: PrimeField) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        Self::new(names, vec![1; n], MonomialOrder::GRevLex, field)
    }

    /// Variables `prefix1..prefixN` in the default field, grevlex.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::standard(&names, PrimeField::default())
    }

    pub fn with_degree_cap(&self, cap: u32) -> Self {
        let d = &self.0;
        PolyRing(Arc::new(RingData {
            names: d.names.clone(),
            weights: d.weights.clone(),
            order: d.order.clone(),
            field: d.field,
            degree_cap: cap.clamp(1, 255),
            all_unit_weights: d.all_unit_weights,
        }))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        let d = &self.0;
        Ok(Self::new(d.names.clone(), d.weights.clone(), order, d.field)?.with_degree_cap(d.degree_cap))
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Self> {
        let d = &self.0;
        Ok(Self::new(d.names.clone(), weights, d.order.clone(), d.field)?.with_degree_cap(d.degree_cap))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    pub fn degree_cap(&self) -> u32 {
        self.0.degree_cap
    }

    pub fn is_standard_graded(&self) -> bool {
        self.0.all_unit_weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        if self.0.all_unit_weights {
            m.total_degree()
        } else {
            self.0.weights.iter().enumerate().map(|(i, &w)| w * m.exp(i)).sum()
        }
    }

    fn block_degree(&self, m: &Monomial, lo: usize, hi: usize) -> u32 {
        (lo..hi).map(|i| self.0.weights[i] * m.exp(i)).sum()
    }

    #[inline]
    fn revlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        for i in (lo..hi).rev() {
            let (x, y) = (a.0[i], b.0[i]);
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }

    /// Compares two monomials in the ring order.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars();
        match self.0.order {
            MonomialOrder::GRevLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| Self::revlex(a, b, 0, n)),
            MonomialOrder::WeightedGRevLex => self
                .weighted_degree(a)
                .cmp(&self.weighted_degree(b))
                .then_with(|| Self::revlex(a, b, 0, n)),
            MonomialOrder::Lex => a.0[..n].cmp(&b.0[..n]),
            MonomialOrder::BlockElimination(k) => self
                .block_degree(a, 0, k)
                .cmp(&self.block_degree(b, 0, k))
                .then_with(|| Self::revlex(a, b, 0, k))
                .then_with(|| self.block_degree(a, k, n).cmp(&self.block_degree(b, k, n)))
                .then_with(|| Self::revlex(a, b, k, n)),
        }
    }

    /// Ring with the given variables (by index) moved to the front and an
    /// elimination order on that front block. Returns the ring and the
    /// old-to-new index map.
    pub fn elimination_ring(&self, front: &[usize]) -> Result<(PolyRing, Vec<usize>)> {
        let n = self.nvars();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for &f in front {
            if f >= n {
                return Err(Error::InvalidRing(format!("variable index {f} out of range")));
            }
            if !order.contains(&f) {
                order.push(f);
            }
        }
        let k = order.len();
        for i in 0..n {
            if !order.contains(&i) {
                order.push(i);
            }
        }
        let mut map = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            map[old] = new;
        }
        let ring = PolyRing::new(
            order.iter().map(|&i| self.0.names[i].clone()).collect(),
            order.iter().map(|&i| self.0.weights[i]).collect(),
            MonomialOrder::BlockElimination(k),
            self.0.field,
        )?
        .with_degree_cap(self.0.degree_cap);
        Ok((ring, map))
    }

    /// Ring on a subset of the variables (original relative order kept).
    pub fn subring(&self, keep: &[usize], order: MonomialOrder) -> Result<PolyRing> {
        Ok(PolyRing::new(
            keep.iter().map(|&i| self.0.names[i].clone()).collect(),
            keep.iter().map(|&i| self.0.weights[i]).collect(),
            order,
            self.0.field,
        )?
        .with_degree_cap(self.0.degree_cap))
    }

    /// Name for a fresh variable that does not clash with existing ones.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.var_index(&name).is_some() {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_tie_break() {
        let r = PolyRing::standard(&["x", "y", "z"], PrimeField::default()).unwrap();
        // x*z vs y^2
        assert_eq!(r.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(r.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
        assert_eq!(r.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let r = PolyRing::new(
            vec!["t".into(), "x".into()],
            vec![1, 1],
            MonomialOrder::BlockElimination(1),
            PrimeField::default(),
        )
        .unwrap();
        assert_eq!(r.cmp(&m(&[1, 0]), &m(&[0, 100])), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_rings() {
        let f = PrimeField::default();
        assert!(PolyRing::standard(&["x", "x"], f).is_err());
        assert!(PolyRing::new(vec!["x".into()], vec![0], MonomialOrder::Lex, f).is_err());
        assert!(PolyRing::new(vec!["x".into()], vec![1], MonomialOrder::BlockElimination(2), f).is_err());
        assert!(PolyRing::standard(&["2x"], f).is_err());
    }

    #[test]
    fn elimination_ring_moves_front() {
        let r = PolyRing::standard(&["x", "y", "t"], PrimeField::default()).unwrap();
        let (e, map) = r.elimination_ring(&[2]).unwrap();
        assert_eq!(e.names(), &["t", "x", "y"]);
        assert_eq!(map, vec![1, 2, 0]);
    }
}
