//! Hilbert series of graded quotients, computed from lead-term ideals.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer polynomials in `t`, lowest degree first.
pub type TPoly = Vec<i64>;

fn trim(mut p: TPoly) -> TPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    if p.is_empty() {
        p.push(0);
    }
    p
}

fn tp_add(a: &[i64], b: &[i64]) -> TPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    trim(out)
}

fn tp_sub(a: &[i64], b: &[i64]) -> TPoly {
    let neg: Vec<i64> = b.iter().map(|v| -v).collect();
    tp_add(a, &neg)
}

fn tp_shift(a: &[i64], k: u32) -> TPoly {
    let mut out = vec![0; k as usize];
    out.extend_from_slice(a);
    trim(out)
}

/// Multiplies by `1 - t^w`.
fn tp_mul_one_minus(a: &[i64], w: u32) -> TPoly {
    tp_sub(a, &tp_shift(a, w))
}

/// Exact division by `1 - t^w`, or `None` if it does not divide.
fn tp_div_one_minus(a: &[i64], w: u32) -> Option<TPoly> {
    let w = w as usize;
    if a.iter().all(|&v| v == 0) {
        return Some(vec![0]);
    }
    // a = (1 - t^w) q  =>  q_i = a_i + q_{i-w}
    let mut q = vec![0i64; a.len()];
    for i in 0..a.len() {
        q[i] = a[i] + if i >= w { q[i - w] } else { 0 };
    }
    // the top w coefficients of q must vanish
    if q.len() < w || q[q.len() - w..].iter().any(|&v| v != 0) {
        return None;
    }
    q.truncate(q.len() - w);
    Some(trim(q))
}

fn tp_eval_one(a: &[i64]) -> i64 {
    a.iter().sum()
}

/// Rational function `numerator / prod (1 - t^w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: TPoly,
    pub weights: Vec<u32>,
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            let s = match (c, i) {
                (c, 0) => c.to_string(),
                (1, _) => mono,
                (-1, _) => format!("-{mono}"),
                (c, _) => format!("{c}*{mono}"),
            };
            terms.push(s);
        }
        let num = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        let mut den: Vec<String> = Vec::new();
        let mut ws = self.weights.clone();
        ws.sort_unstable();
        let mut i = 0;
        while i < ws.len() {
            let w = ws[i];
            let mut k = 0;
            while i < ws.len() && ws[i] == w {
                k += 1;
                i += 1;
            }
            let base = if w == 1 {
                "(1-t)".to_string()
            } else {
                format!("(1-t^{w})")
            };
            den.push(if k == 1 { base } else { format!("{base}^{k}") });
        }
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/{}", den.join(""))
        }
    }
}

impl HilbertSeries {
    /// Equality as rational functions, by cross-multiplying denominators.
    pub fn same_series(&self, other: &HilbertSeries) -> bool {
        let mut a = trim(self.numerator.clone());
        for &w in &other.weights {
            a = tp_mul_one_minus(&a, w);
        }
        let mut b = trim(other.numerator.clone());
        for &w in &self.weights {
            b = tp_mul_one_minus(&b, w);
        }
        a == b
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn simplified(&self) -> HilbertSeries {
        let mut num = trim(self.numerator.clone());
        let mut kept = Vec::new();
        let mut ws = self.weights.clone();
        ws.sort_unstable_by(|a, b| b.cmp(a));
        for w in ws {
            match tp_div_one_minus(&num, w) {
                Some(q) if num.iter().any(|&v| v != 0) => num = q,
                _ => kept.push(w),
            }
        }
        kept.sort_unstable();
        HilbertSeries {
            numerator: num,
            weights: kept,
        }
    }

    /// `self - other`, over the product of both denominators.
    pub fn difference(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut a = trim(self.numerator.clone());
        for &w in &other.weights {
            a = tp_mul_one_minus(&a, w);
        }
        let mut b = trim(other.numerator.clone());
        for &w in &self.weights {
            b = tp_mul_one_minus(&b, w);
        }
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        HilbertSeries {
            numerator: tp_sub(&a, &b),
            weights,
        }
        .simplified()
    }

    /// Multiplies by `t^k`.
    pub fn shifted(&self, k: u32) -> HilbertSeries {
        HilbertSeries {
            numerator: tp_shift(&self.numerator, k),
            weights: self.weights.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|&v| v == 0)
    }

    /// Krull dimension: pole order at `t = 1`. `None` for the zero series.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut num = trim(self.numerator.clone());
        let mut ord = 0;
        while let Some(q) = tp_div_one_minus(&num, 1) {
            if q.iter().all(|&v| v == 0) {
                break;
            }
            num = q;
            ord += 1;
        }
        Some(self.weights.len() - ord)
    }

    /// Power-series coefficients up to degree `up_to` inclusive.
    pub fn expand(&self, up_to: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..=up_to)
            .map(|i| self.numerator.get(i).copied().unwrap_or(0))
            .collect();
        for &w in &self.weights {
            let w = w as usize;
            for i in w..=up_to {
                c[i] += c[i - w];
            }
        }
        c
    }

    /// Highest degree of a nonzero numerator coefficient.
    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.iter().rposition(|&v| v != 0)
    }

    /// Sum of the coefficients of the numerator (after simplification this is
    /// the multiplicity for standard gradings).
    pub fn numerator_at_one(&self) -> i64 {
        tp_eval_one(&self.numerator)
    }
}

/// Numerator of the Hilbert series of `R / (gens)` for a monomial ideal.
pub fn monomial_numerator(ring: &PolyRing, gens: &[Monomial]) -> TPoly {
    let mut g = minimalize(gens.to_vec());
    g.sort();
    numerator_rec(ring, g)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator_rec(ring: &PolyRing, gens: Vec<Monomial>) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    let n = ring.nvars();
    let mut count = vec![0usize; n];
    for g in &gens {
        for (v, c) in count.iter_mut().enumerate() {
            if g.exp(v) > 0 {
                *c += 1;
            }
        }
    }
    let pivot_var = (0..n).filter(|&v| count[v] >= 2).max_by_key(|&v| (count[v], n - v));
    let Some(v) = pivot_var else {
        // pairwise coprime generators
        let mut p: TPoly = vec![1];
        for g in &gens {
            p = tp_mul_one_minus(&p, ring.weighted_degree(g));
        }
        return p;
    };
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[exps.len() / 2];
    // the pivot must not already lie in the ideal
    if let Some(pure) = gens
        .iter()
        .filter(|g| g.exp(v) > 0 && (0..n).all(|u| u == v || g.exp(u) == 0))
        .map(|g| g.exp(v))
        .min()
    {
        e = e.min(pure - 1);
    }
    let e = e.max(1);
    let p = Monomial::var(v, e as u8);
    let mut plus = gens.clone();
    plus.push(p);
    let plus = minimalize(plus);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut q = *g;
            q.set_exp(v, g.exp(v).saturating_sub(e) as u8);
            q
        })
        .collect();
    let colon = minimalize(colon);
    let a = numerator_rec(ring, plus);
    let b = numerator_rec(ring, colon);
    tp_add(&a, &tp_shift(&b, ring.weighted_degree(&p)))
}

fn require_homogeneous(a: &Ideal) -> Result<()> {
    if !a.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("{a:?}")));
    }
    Ok(())
}

/// Hilbert series of `R / A` (not simplified).
pub fn hilbert_series_of_quotient(a: &Ideal) -> Result<HilbertSeries> {
    require_homogeneous(a)?;
    let ring = a.ring();
    let leads = a.gb()?.lead_monomials();
    Ok(HilbertSeries {
        numerator: monomial_numerator(ring, &leads),
        weights: ring.weights().to_vec(),
    })
}

/// Krull dimension of `R / A`; the unit ideal gives `None`.
pub fn dimension(a: &Ideal) -> Result<Option<usize>> {
    Ok(hilbert_series_of_quotient(a)?.dimension())
}

/// `dim R - dim R/A`; the unit ideal has height `dim R + 1` by convention.
pub fn height(a: &Ideal) -> Result<usize> {
    let n = a.ring().nvars();
    Ok(match dimension(a)? {
        Some(d) => n - d,
        None => n + 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthValue {
    Finite(u64),
    Infinite,
}

impl LengthValue {
    pub fn finite(&self) -> Option<u64> {
        match self {
            LengthValue::Finite(v) => Some(*v),
            LengthValue::Infinite => None,
        }
    }
}

impl fmt::Display for LengthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthValue::Finite(v) => write!(f, "{v}"),
            LengthValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Length of `A / B` for homogeneous `B ⊆ A`.
pub fn length_of_quotient(a: &Ideal, b: &Ideal) -> Result<LengthValue> {
    require_homogeneous(a)?;
    require_homogeneous(b)?;
    if !a.contains(b)? {
        return Err(Error::Containment(format!("{b:?} is not contained in {a:?}")));
    }
    let ha = hilbert_series_of_quotient(a)?;
    let hb = hilbert_series_of_quotient(b)?;
    let mut diff = tp_sub(&hb.numerator, &ha.numerator);
    for &w in &ha.weights {
        match tp_div_one_minus(&diff, w) {
            Some(q) => diff = q,
            None => return Ok(LengthValue::Infinite),
        }
    }
    let v = tp_eval_one(&diff);
    debug_assert!(v >= 0);
    Ok(LengthValue::Finite(v as u64))
}

/// Length of `R / A`.
pub fn colength(a: &Ideal) -> Result<LengthValue> {
    length_of_quotient(&Ideal::unit(a.ring()), a)
}

/// Number of general draws tried by [`hs_multiplicity`].
pub const MULTIPLICITY_TRIALS: usize = 8;

/// Hilbert-Samuel multiplicity of an equigenerated `m`-primary ideal:
/// the colength of `dim R` general combinations of its generators, repeated
/// over seeds until two draws agree.
pub fn hs_multiplicity(a: &Ideal, seed: u64) -> Result<u64> {
    let Some(_) = a.generating_degree() else {
        return Err(Error::NotEquigenerated(format!("{a:?}")));
    };
    if dimension(a)? != Some(0) {
        return Err(Error::Precondition(format!(
            "{a:?} is not primary to the maximal ideal"
        )));
    }
    let ring = a.ring();
    let n = ring.nvars();
    let gens = a.gens();
    let p = ring.field().characteristic();
    let mut seen: Vec<u64> = Vec::new();
    for trial in 0..MULTIPLICITY_TRIALS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
        let mut combos = Vec::with_capacity(n);
        for _ in 0..n {
            let mut acc = crate::poly::Polynomial::zero(ring);
            for g in gens {
                acc = &acc + &g.scale(rng.gen_range(0..p));
            }
            combos.push(acc);
        }
        let j = Ideal::new(ring, combos)?;
        if let LengthValue::Finite(v) = colength(&j)? {
            if seen.contains(&v) {
                return Ok(v);
            }
            seen.push(v);
        }
    }
    Err(Error::SeedDisagreement {
        trials: MULTIPLICITY_TRIALS,
        details: format!("colengths {seen:?}"),
    })
}

/// Hilbert series of a graded module `F / M` with `F` free with the given
/// shifts and `M` given by a Groebner basis in a degree-compatible order.
pub fn module_hilbert_series(ring: &PolyRing, shifts: &[u32], gb_leads: &[(Monomial, u32)]) -> HilbertSeries {
    let mut num: TPoly = vec![0];
    for (c, &s) in shifts.iter().enumerate() {
        let leads: Vec<Monomial> = gb_leads
            .iter()
            .filter(|(_, comp)| *comp as usize == c)
            .map(|(m, _)| *m)
            .collect();
        num = tp_add(&num, &tp_shift(&monomial_numerator(ring, &leads), s));
    }
    HilbertSeries {
        numerator: num,
        weights: ring.weights().to_vec(),
    }
}
