//! Ideals with a cached reduced Groebner basis, and the quotient toolbox.

use crate::error::{Error, Result};
use crate::groebner::{self, ReducedGB};
use crate::linalg::SparseEchelon;
use crate::monomial::Monomial;
use crate::parse::parse_polynomial;
use crate::poly::{Polynomial, Term};
use crate::ring::{MonomialOrder, PolyRing};
use std::fmt;
use std::sync::OnceLock;

/// Iteration cap for saturation.
pub const SATURATION_CAP: usize = 64;

pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<ReducedGB>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!("generator {g} is not in {ring:?}")));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &PolyRing, srcs: &[&str]) -> Result<Self> {
        let gens = srcs
            .iter()
            .map(|s| parse_polynomial(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &PolyRing) -> Self {
        Self::new(ring, Polynomial::vars(ring)).unwrap()
    }

    /// Ideal generated by the listed variables.
    pub fn of_vars(ring: &PolyRing, vars: &[usize]) -> Self {
        Self::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> Result<&ReducedGB> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = groebner::buchberger_in(&self.ring, &self.gens)?;
        // a concurrent writer computes the same basis, so losing the race is harmless
        let _ = self.gb.set(g);
        Ok(self.gb.get().unwrap())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.gb()?.is_unit_ideal())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// `Some(d)` if every generator is homogeneous of degree `d`.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree()?;
        self.gens
            .iter()
            .all(|g| g.is_homogeneous() && g.degree() == Some(d))
            .then_some(d)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.gb()?.contains(f))
    }

    /// `other` is a subset of `self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb()?.basis() == other.gb()?.basis())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.gb()?.normal_form(f))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    /// Products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, g)
    }

    /// `I^n` generated by the products of `n`-element multisets of generators.
    /// `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        self.check_power_degree(n)?;
        // (product, index of the largest factor used)
        let mut layer: Vec<(Polynomial, usize)> = self.gens.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for (p, last) in &layer {
                for (i, g) in self.gens.iter().enumerate().skip(*last) {
                    next.push((p.checked_mul(g)?, i));
                }
            }
            layer = next;
        }
        Ideal::new(&self.ring, layer.into_iter().map(|(p, _)| p).collect())
    }

    fn check_power_degree(&self, n: u32) -> Result<()> {
        let top = self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
        let cap = self.ring.degree_cap();
        if top as u64 * n as u64 > cap as u64 {
            return Err(Error::DegreeBudget { degree: top * n, cap });
        }
        Ok(())
    }

    /// `I^n` with generators replaced degree by degree by a linear basis of
    /// their span. Same ideal as [`Ideal::power`], usually far fewer generators.
    pub fn power_compact(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        self.check_power_degree(n)?;
        let base = self.compact();
        let mut acc = base.clone();
        for _ in 1..n {
            acc = acc.product(&base)?.compact();
        }
        Ok(acc)
    }

    /// Product followed by [`Ideal::compact`].
    pub fn product_compact(&self, other: &Ideal) -> Result<Ideal> {
        Ok(self.product(other)?.compact())
    }

    /// Replaces homogeneous generators of each degree by an echelon basis of
    /// their span. Inhomogeneous generators are kept as they are.
    pub fn compact(&self) -> Ideal {
        let mut by_degree: std::collections::BTreeMap<u32, Vec<&Polynomial>> = Default::default();
        let mut other = Vec::new();
        for g in &self.gens {
            if g.is_homogeneous() {
                by_degree.entry(g.degree().unwrap()).or_default().push(g);
            } else {
                other.push(g.clone());
            }
        }
        let mut out = Vec::new();
        for (_, gs) in by_degree {
            out.extend(linear_basis(&self.ring, gs.into_iter()));
        }
        out.extend(other);
        Ideal::new(&self.ring, out).unwrap()
    }

    /// `f * I`.
    pub fn mul_poly(&self, f: &Polynomial) -> Result<Ideal> {
        let g = self.gens.iter().map(|g| g.checked_mul(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, g)
    }

    /// Intersection through one auxiliary variable `u`: the part of
    /// `u*A + (1-u)*B` free of `u`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let mut names = vec![self.ring.fresh_name("u")];
        names.extend(self.ring.names().iter().cloned());
        let mut weights = vec![1];
        weights.extend(self.ring.weights().iter().copied());
        let big = PolyRing::new(names, weights, MonomialOrder::BlockElimination(1), *self.ring.field())?
            .with_degree_cap(self.ring.degree_cap());
        let map: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
        let u = Polynomial::var(&big, 0);
        let one_minus_u = &Polynomial::one(&big) - &u;
        let mut gens = Vec::new();
        for a in &self.gens {
            gens.push(&a.map_vars(&big, &map)? * &u);
        }
        for b in &other.gens {
            gens.push(&b.map_vars(&big, &map)? * &one_minus_u);
        }
        let gb = groebner::buchberger_in(&big, &gens)?;
        let back: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
        let mut out = Vec::new();
        for g in gb.basis() {
            if g.avoids(&[0]) {
                out.push(g.map_vars(&self.ring, &back)?);
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `A : f`, as `(A ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{f} is not in {:?}", self.ring)));
        }
        if f.is_zero() || self.contains_poly(f)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter.gens.iter().map(|g| g.div_exact(f)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `A : B`, the intersection of `A : b` over the generators of `B`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for b in &other.gens {
            let c = self.colon_poly(b)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
            if let Some(a) = &acc {
                // nothing below A itself can come out of further intersections
                if a.equals(self)? {
                    break;
                }
            }
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `A : B^∞` by iterating `S <- S : B` to a fixed point.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.saturate_with_cap(other, SATURATION_CAP)
    }

    pub fn saturate_with_cap(&self, other: &Ideal, cap: usize) -> Result<Ideal> {
        let mut s = self.clone();
        for _ in 0..cap {
            let next = s.colon(other)?;
            if next.equals(&s)? {
                return Ok(s);
            }
            s = next;
        }
        Err(Error::IterationCap {
            stage: "saturation".into(),
            cap,
        })
    }

    /// `A : B^t`, computed as `(..(A : B) : B ..) : B`.
    pub fn colon_power(&self, other: &Ideal, t: u32) -> Result<Ideal> {
        let mut s = self.clone();
        for _ in 0..t {
            s = s.colon(other)?;
        }
        Ok(s)
    }

    /// `A ∩ k[remaining variables]`, returned in the ring on the variables not
    /// listed in `front_vars` (original relative order, graded reverse
    /// lexicographic with the original weights).
    pub fn eliminate(&self, front_vars: &[usize]) -> Result<Ideal> {
        let (elim, map) = self.ring.elimination_ring(front_vars)?;
        let map_opt: Vec<Option<usize>> = map.iter().map(|&j| Some(j)).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_vars(&elim, &map_opt))
            .collect::<Result<Vec<_>>>()?;
        let gb = groebner::buchberger_in(&elim, &gens)?;
        let front: Vec<usize> = (0..front_vars.len()).collect();
        let keep: Vec<usize> = (0..self.ring.nvars()).filter(|i| !front_vars.contains(i)).collect();
        let order = if self.ring.is_standard_graded() {
            MonomialOrder::GRevLex
        } else {
            MonomialOrder::WeightedGRevLex
        };
        let sub = self.ring.subring(&keep, order)?;
        // elim index -> sub index
        let mut back = vec![None; self.ring.nvars()];
        for (si, &old) in keep.iter().enumerate() {
            back[map[old]] = Some(si);
        }
        let mut out = Vec::new();
        for g in gb.basis() {
            if g.avoids(&front) {
                out.push(g.map_vars(&sub, &back)?);
            }
        }
        Ideal::new(&sub, out)
    }

    /// Moves the ideal to a ring with the same variables but another order or weights.
    pub fn rebase(&self, target: &PolyRing) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.rebase(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn map_vars(&self, target: &PolyRing, map: &[Option<usize>]) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_vars(target, map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Minimal homogeneous generators: by increasing degree, keep `g` iff it
    /// is not in the ideal of the generators kept so far.
    pub fn min_gens(&self) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("{self:?}")));
        }
        groebner::minimal_generators(&self.ring, &self.gens)
    }

    pub fn mu(&self) -> Result<usize> {
        Ok(self.min_gens()?.len())
    }

    /// `Fitt_i` of the ideal viewed as a module: the ideal of
    /// `(n - i)`-minors of the syzygy matrix of a minimal generating set of
    /// size `n`. `Fitt_i` is the unit ideal for `i >= n`.
    pub fn fitting_ideal(&self, i: usize) -> Result<Ideal> {
        let g = self.min_gens()?;
        let n = g.len();
        if i >= n {
            return Ok(Ideal::unit(&self.ring));
        }
        let k = n - i;
        let syz = groebner::syzygies(&g)?;
        let m = syz.ncols();
        if k > m {
            return Ok(Ideal::zero(&self.ring));
        }
        let rows: Vec<Vec<Polynomial>> = (0..n)
            .map(|r| (0..m).map(|c| syz.entry(r, c).clone()).collect())
            .collect();
        let minors = crate::determinant::all_minors(&self.ring, &rows, k)?;
        Ok(Ideal::new(&self.ring, minors)?.compact())
    }

    /// Degree-`d` part of the ideal as an echelon form over monomials.
    /// The ideal must be homogeneous.
    pub fn degree_span(&self, d: u32) -> Result<SparseEchelon<Monomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("{self:?}")));
        }
        let mut ech = SparseEchelon::new(self.ring.field());
        for g in &self.gens {
            let gd = g.degree().unwrap();
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(&self.ring, d - gd) {
                let p = g.mul_term(1, &m)?;
                ech.insert(p.terms().iter().map(|t| (t.mono, t.coeff)).collect());
            }
        }
        Ok(ech)
    }
}

/// Echelon basis (as polynomials) of the span of the given polynomials.
pub(crate) fn linear_basis<'a>(ring: &PolyRing, polys: impl Iterator<Item = &'a Polynomial>) -> Vec<Polynomial> {
    let mut ech: SparseEchelon<Monomial> = SparseEchelon::new(ring.field());
    for p in polys {
        ech.insert(p.terms().iter().map(|t| (t.mono, t.coeff)).collect());
    }
    ech.rows()
        .iter()
        .map(|r| Polynomial::from_terms(ring, r.iter().map(|&(mono, coeff)| Term { coeff, mono }).collect()))
        .collect()
}

/// All monomials of weighted degree `d`.
pub fn monomials_of_degree(ring: &PolyRing, d: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    let w = ring.weights();
    let mut out = Vec::new();
    let mut cur = Monomial::one();
    fn rec(i: usize, n: usize, left: u32, w: &[u32], cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == n {
            if left == 0 {
                out.push(*cur);
            }
            return;
        }
        let mut e = 0u32;
        while e * w[i] <= left && e <= u8::MAX as u32 {
            cur.set_exp(i, e as u8);
            rec(i + 1, n, left - e * w[i], w, cur, out);
            e += 1;
        }
        cur.set_exp(i, 0);
    }
    rec(0, n, d, w, &mut cur, &mut out);
    out
}
