//! Vectors in graded free modules and module monomial orders.
//!
//! Ideals are handled as submodules of the rank one free module, so the
//! Groebner engine only ever sees vectors.

use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MTerm {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: u32,
}

/// Terms sorted strictly decreasing in some module order.
pub type MVec = Vec<MTerm>;

#[derive(Clone, Debug)]
pub enum ModOrder {
    /// Degree (including the component shift) first, then the ring order, then
    /// lower component index wins.
    Top { shifts: Vec<u32> },
    /// Lower component index wins, then the ring order. Shifts only feed degrees.
    Pot { shifts: Vec<u32> },
    /// Order induced on a free module by a Groebner basis of the module below.
    Schreyer(Arc<SchreyerLevel>),
}

/// Basis data of one free module in a Schreyer frame. Basis element `a`
/// corresponds to a Groebner basis element whose lead term lies in
/// component `lead_comp[a]` of the module below.
#[derive(Debug)]
pub struct SchreyerLevel {
    pub(crate) tot: Vec<Monomial>,
    pub(crate) tot_comp: Vec<u32>,
    pub(crate) deg: Vec<u32>,
    pub(crate) lead_comp: Vec<u32>,
    pub(crate) below: Option<Arc<SchreyerLevel>>,
    pub(crate) base: Arc<ModOrder>,
}

impl SchreyerLevel {
    pub fn rank(&self) -> usize {
        self.tot.len()
    }

    /// Level above the free module `F0` with order `base`, built from the lead
    /// terms `(mono, comp)` of a Groebner basis in `F0`.
    pub(crate) fn first(ring: &PolyRing, base: Arc<ModOrder>, leads: &[(Monomial, u32)]) -> Self {
        let deg = leads.iter().map(|(m, c)| base.degree(ring, m, *c)).collect();
        SchreyerLevel {
            tot: leads.iter().map(|l| l.0).collect(),
            tot_comp: leads.iter().map(|l| l.1).collect(),
            deg,
            lead_comp: leads.iter().map(|l| l.1).collect(),
            below: None,
            base,
        }
    }

    /// Level built from leads `(mono, comp)` living in the module described by `below`.
    pub(crate) fn next(ring: &PolyRing, below: Arc<SchreyerLevel>, leads: &[(Monomial, u32)]) -> Self {
        let mut tot = Vec::with_capacity(leads.len());
        let mut tot_comp = Vec::with_capacity(leads.len());
        let mut deg = Vec::with_capacity(leads.len());
        for (m, c) in leads {
            let c = *c as usize;
            tot.push(m.mul(&below.tot[c]));
            tot_comp.push(below.tot_comp[c]);
            deg.push(ring.weighted_degree(m) + below.deg[c]);
        }
        SchreyerLevel {
            tot,
            tot_comp,
            deg,
            lead_comp: leads.iter().map(|l| l.1).collect(),
            base: below.base.clone(),
            below: Some(below),
        }
    }

    fn cmp(&self, ring: &PolyRing, am: &Monomial, a: u32, bm: &Monomial, b: u32) -> Ordering {
        let (ai, bi) = (a as usize, b as usize);
        let ta = am.mul(&self.tot[ai]);
        let tb = bm.mul(&self.tot[bi]);
        let r = self.base.cmp(ring, &ta, self.tot_comp[ai], &tb, self.tot_comp[bi]);
        if r != Ordering::Equal || a == b {
            return r;
        }
        // equal images in F0: the tie is broken by basis index at the deepest
        // level where the two chains still differ
        let (mut x, mut y) = (ai, bi);
        let mut lv = self;
        loop {
            let (px, py) = (lv.lead_comp[x], lv.lead_comp[y]);
            match &lv.below {
                Some(below) if px != py => {
                    x = px as usize;
                    y = py as usize;
                    lv = below;
                }
                _ => return y.cmp(&x),
            }
        }
    }
}

impl ModOrder {
    pub fn top(rank: usize) -> Self {
        ModOrder::Top { shifts: vec![0; rank] }
    }

    #[inline]
    pub fn shift(&self, c: u32) -> u32 {
        match self {
            ModOrder::Top { shifts } | ModOrder::Pot { shifts } => shifts.get(c as usize).copied().unwrap_or(0),
            ModOrder::Schreyer(lv) => lv.deg[c as usize],
        }
    }

    #[inline]
    pub fn degree(&self, ring: &PolyRing, m: &Monomial, c: u32) -> u32 {
        ring.weighted_degree(m) + self.shift(c)
    }

    #[inline]
    pub fn cmp(&self, ring: &PolyRing, am: &Monomial, a: u32, bm: &Monomial, b: u32) -> Ordering {
        match self {
            ModOrder::Top { shifts } => {
                let da = ring.weighted_degree(am) + shifts[a as usize];
                let db = ring.weighted_degree(bm) + shifts[b as usize];
                da.cmp(&db).then_with(|| ring.cmp(am, bm)).then_with(|| b.cmp(&a))
            }
            ModOrder::Pot { .. } => b.cmp(&a).then_with(|| ring.cmp(am, bm)),
            ModOrder::Schreyer(lv) => lv.cmp(ring, am, a, bm, b),
        }
    }

    #[inline]
    pub fn cmp_terms(&self, ring: &PolyRing, a: &MTerm, b: &MTerm) -> Ordering {
        self.cmp(ring, &a.mono, a.comp, &b.mono, b.comp)
    }
}

pub fn sort_vec(ring: &PolyRing, order: &ModOrder, v: &mut MVec) {
    v.sort_by(|a, b| order.cmp_terms(ring, b, a));
    let f = ring.field();
    let mut out: MVec = Vec::with_capacity(v.len());
    for t in v.drain(..) {
        match out.last_mut() {
            Some(l) if l.mono == t.mono && l.comp == t.comp => l.coeff = f.add(l.coeff, t.coeff),
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coeff != 0);
    *v = out;
}

/// `f - c * m * g` for sorted vectors.
pub fn sub_mul(ring: &PolyRing, order: &ModOrder, f: &[MTerm], c: u32, m: &Monomial, g: &[MTerm]) -> MVec {
    let field = ring.field();
    let nc = field.neg(c);
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < g.len() {
        let gm = m.mul(&g[j].mono);
        match order.cmp(ring, &f[i].mono, f[i].comp, &gm, g[j].comp) {
            Ordering::Greater => {
                out.push(f[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(MTerm {
                    mono: gm,
                    comp: g[j].comp,
                    coeff: field.mul(nc, g[j].coeff),
                });
                j += 1;
            }
            Ordering::Equal => {
                let v = field.add(f[i].coeff, field.mul(nc, g[j].coeff));
                if v != 0 {
                    out.push(MTerm {
                        mono: gm,
                        comp: g[j].comp,
                        coeff: v,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    for t in &g[j..] {
        out.push(MTerm {
            mono: m.mul(&t.mono),
            comp: t.comp,
            coeff: field.mul(nc, t.coeff),
        });
    }
    out
}

pub fn add(ring: &PolyRing, order: &ModOrder, f: &[MTerm], g: &[MTerm]) -> MVec {
    let minus_one = ring.field().neg(1);
    sub_mul(ring, order, f, minus_one, &Monomial::one(), g)
}

pub fn scale(ring: &PolyRing, v: &mut [MTerm], c: u32) {
    let f = ring.field();
    for t in v.iter_mut() {
        t.coeff = f.mul(t.coeff, c);
    }
}

pub fn make_monic(ring: &PolyRing, v: &mut [MTerm]) {
    if let Some(t) = v.first() {
        if t.coeff != 1 {
            let inv = ring.field().inv(t.coeff);
            scale(ring, v, inv);
        }
    }
}

/// Multiplies a vector by a polynomial.
pub fn mul_poly(ring: &PolyRing, order: &ModOrder, p: &Polynomial, v: &[MTerm]) -> MVec {
    let mut out: MVec = Vec::new();
    let minus_one = ring.field().neg(1);
    for t in p.terms() {
        let scaled: MVec = v
            .iter()
            .map(|s| MTerm {
                mono: s.mono,
                comp: s.comp,
                coeff: ring.field().mul(s.coeff, t.coeff),
            })
            .collect();
        out = sub_mul(ring, order, &out, minus_one, &t.mono, &scaled);
    }
    out
}

pub fn from_poly(p: &Polynomial, comp: u32) -> MVec {
    p.terms()
        .iter()
        .map(|t| MTerm {
            mono: t.mono,
            comp,
            coeff: t.coeff,
        })
        .collect()
}

/// Rank-one vector back to a polynomial. Terms of other components are ignored.
pub fn to_poly(ring: &PolyRing, v: &[MTerm]) -> Polynomial {
    let terms: Vec<Term> = v
        .iter()
        .map(|t| Term {
            coeff: t.coeff,
            mono: t.mono,
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Splits a vector into one polynomial per component `0..rank`.
pub fn to_columns(ring: &PolyRing, v: &[MTerm], rank: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<Term>> = vec![Vec::new(); rank];
    for t in v {
        parts[t.comp as usize].push(Term {
            coeff: t.coeff,
            mono: t.mono,
        });
    }
    parts.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect()
}

/// Vector from one polynomial per component.
pub fn from_columns(ring: &PolyRing, order: &ModOrder, entries: &[Polynomial]) -> MVec {
    let mut v: MVec = Vec::new();
    for (c, p) in entries.iter().enumerate() {
        v.extend(from_poly(p, c as u32));
    }
    sort_vec(ring, order, &mut v);
    v
}

pub fn lead(v: &[MTerm]) -> Option<(Monomial, u32)> {
    v.first().map(|t| (t.mono, t.comp))
}

/// True if every term has the same degree under `order`.
pub fn is_homogeneous(ring: &PolyRing, order: &ModOrder, v: &[MTerm]) -> bool {
    match v.first() {
        None => true,
        Some(t0) => {
            let d = order.degree(ring, &t0.mono, t0.comp);
            v.iter().all(|t| order.degree(ring, &t.mono, t.comp) == d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn schreyer_tie_goes_to_lower_index() {
        let ring = PolyRing::standard(&["x", "y"], PrimeField::default()).unwrap();
        let base = Arc::new(ModOrder::top(1));
        let x = Monomial::var(0, 1);
        let y = Monomial::var(1, 1);
        // basis e0 -> x, e1 -> y
        let lv = SchreyerLevel::first(&ring, base, &[(x, 0), (y, 0)]);
        // y*e0 and x*e1 both map to xy
        assert_eq!(lv.cmp(&ring, &y, 0, &x, 1), Ordering::Greater);
        assert_eq!(lv.cmp(&ring, &x, 1, &y, 0), Ordering::Less);
        assert_eq!(lv.cmp(&ring, &x, 0, &y, 1), Ordering::Greater);
    }

    #[test]
    fn top_and_pot() {
        let ring = PolyRing::standard(&["x", "y"], PrimeField::default()).unwrap();
        let x = Monomial::var(0, 1);
        let y2 = Monomial::var(1, 2);
        let top = ModOrder::Top { shifts: vec![0, 0] };
        assert_eq!(top.cmp(&ring, &x, 0, &y2, 1), Ordering::Less);
        let pot = ModOrder::Pot { shifts: vec![0, 0] };
        assert_eq!(pot.cmp(&ring, &x, 0, &y2, 1), Ordering::Greater);
    }
}
