//! Sparse polynomials in distributive form.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// A polynomial with terms sorted strictly decreasing in the ring order and
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}
impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn check_same(a: &PolyRing, b: &PolyRing) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch(format!("{a:?} vs {b:?}")));
    }
    Ok(())
}

/// Sum of two sorted term lists.
pub(crate) fn merge_add(ring: &PolyRing, a: &[Term], b: &[Term]) -> Vec<Term> {
    let f = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                let c = f.add(a[i].coeff, b[j].coeff);
                if c != 0 {
                    out.push(Term {
                        coeff: c,
                        mono: a[i].mono,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::monomial(ring, c, Monomial::one())
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, 1)
    }

    pub fn monomial(ring: &PolyRing, coeff: u32, mono: Monomial) -> Self {
        let coeff = coeff % ring.field().characteristic();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable with index `i`.
    pub fn var(ring: &PolyRing, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index {i} out of range");
        Self::monomial(ring, 1, Monomial::var(i, 1))
    }

    /// All variables of the ring, in order.
    pub fn vars(ring: &PolyRing) -> Vec<Self> {
        (0..ring.nvars()).map(|i| Self::var(ring, i)).collect()
    }

    /// Canonicalizes an arbitrary list of terms: sorts, combines, drops zeros.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Self {
        let p = ring.field().characteristic();
        for t in terms.iter_mut() {
            t.coeff %= p;
        }
        terms.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        let f = ring.field();
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = f.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn lead_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.coeff)
    }

    /// Maximum weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| self.ring.weighted_degree(&t.mono)).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| self.ring.weighted_degree(&t.mono)).min()
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = self.ring.weighted_degree(&t0.mono);
                self.terms.iter().all(|t| self.ring.weighted_degree(&t.mono) == d)
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.ring, &self.terms, &other.terms),
        })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let neg = other.neg();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.ring, &self.terms, &neg.terms),
        })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let f = self.ring.field();
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mono = a
                    .mono
                    .checked_mul(&b.mono)
                    .ok_or(Error::ExponentOverflow { max: u8::MAX as u32 })?;
                prods.push(Term {
                    coeff: f.mul(a.coeff, b.coeff),
                    mono,
                });
            }
        }
        Ok(Polynomial::from_terms(&self.ring, prods))
    }

    pub fn checked_pow(&self, e: u32) -> Result<Polynomial> {
        let top = self
            .terms
            .iter()
            .flat_map(|t| (0..self.ring.nvars()).map(move |i| t.mono.exp(i)))
            .max()
            .unwrap_or(0);
        if top as u64 * e as u64 > u8::MAX as u64 {
            return Err(Error::ExponentOverflow { max: u8::MAX as u32 });
        }
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: f.neg(t.coeff),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: f.mul(t.coeff, c),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    /// Multiplies by `c * mono`. Monomial orders are multiplicative so the order is kept.
    pub fn mul_term(&self, c: u32, mono: &Monomial) -> Result<Polynomial> {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: f.mul(t.coeff, c),
                mono: t
                    .mono
                    .checked_mul(mono)
                    .ok_or(Error::ExponentOverflow { max: u8::MAX as u32 })?,
            });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(self.ring.field().inv(t.coeff)),
        }
    }

    /// Exact division `self / d`; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &d.ring)?;
        let lt = d
            .terms
            .first()
            .ok_or_else(|| Error::Division("division by zero".into()))?;
        let f = self.ring.field();
        let inv = f.inv(lt.coeff);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.terms.first().copied() {
            let Some(m) = t.mono.checked_div(&lt.mono) else {
                return Err(Error::Division(format!("{d} does not divide {self}")));
            };
            let c = f.mul(t.coeff, inv);
            quot.push(Term { coeff: c, mono: m });
            let sub = d.mul_term(f.neg(c), &m)?;
            rem = rem.checked_add(&sub)?;
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    /// Homogeneous component of weighted degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| self.ring.weighted_degree(&t.mono) == deg)
                .copied()
                .collect(),
        }
    }

    /// Coefficient of a monomial.
    pub fn coeff_of(&self, mono: &Monomial) -> u32 {
        self.terms.iter().find(|t| t.mono == *mono).map_or(0, |t| t.coeff)
    }

    /// Moves into `target` renaming variable `i` to `map[i]`; `None` entries
    /// must not occur in the support.
    pub fn map_vars(&self, target: &PolyRing, map: &[Option<usize>]) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut m = Monomial::one();
            for i in 0..self.ring.nvars() {
                let e = t.mono.exp(i);
                if e == 0 {
                    continue;
                }
                match map.get(i).copied().flatten() {
                    Some(j) => m.set_exp(j, e as u8),
                    None => {
                        return Err(Error::RingMismatch(format!(
                            "variable {} has no image",
                            self.ring.names()[i]
                        )))
                    }
                }
            }
            terms.push(Term {
                coeff: t.coeff,
                mono: m,
            });
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves into a ring with identical variables (e.g. a different order or weights).
    pub fn rebase(&self, target: &PolyRing) -> Result<Polynomial> {
        if target.nvars() != self.ring.nvars()
            || target.field() != self.ring.field()
            || target.names() != self.ring.names()
        {
            return Err(Error::RingMismatch(format!(
                "cannot rebase {:?} to {:?}",
                self.ring, target
            )));
        }
        Ok(Polynomial::from_terms(target, self.terms.clone()))
    }

    /// Substitutes polynomials (all in `target`) for the variables.
    pub fn substitute(&self, target: &PolyRing, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        for im in images {
            check_same(im.ring(), target)?;
        }
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        for t in &self.terms {
            let mut p = Polynomial::constant(target, t.coeff as i64);
            for (i, img) in images.iter().enumerate() {
                let e = t.mono.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().checked_mul(img)?;
                    powers[i].push(next);
                }
                if e > 0 {
                    p = p.checked_mul(&powers[i][e])?;
                }
            }
            acc = acc.checked_add(&p)?;
        }
        Ok(acc)
    }

    /// Evaluates at a point of F_p^n.
    pub fn eval(&self, point: &[u32]) -> u32 {
        let f = self.ring.field();
        let mut acc = 0;
        for t in &self.terms {
            let mut v = t.coeff;
            for (i, &x) in point.iter().enumerate().take(self.ring.nvars()) {
                let e = t.mono.exp(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// True if no term involves any of the listed variables.
    pub fn avoids(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|t| vars.iter().all(|&v| t.mono.exp(v) == 0))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_polynomial(self))
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on ring mismatch or exponent overflow; use the `checked_` form to handle those.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect(concat!("polynomial ", stringify!($method)))
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
