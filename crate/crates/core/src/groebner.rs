//! Buchberger's algorithm on module vectors with the sugar strategy and the
//! Gebauer-Moeller pair update.

use crate::error::{Error, Result};
use crate::hilbert::{self, HilbertSeries};
use crate::linalg::SparseEchelon;
use crate::module::{self, MTerm, MVec, ModOrder};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::cmp::Ordering;
use std::fmt;

/// Counters collected during one Groebner computation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_created: usize,
    pub pairs_removed: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_sugar: u32,
    pub basis_size: usize,
}

impl fmt::Display for GbStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pairs created: {}", self.pairs_created)?;
        writeln!(f, "pairs removed by criteria: {}", self.pairs_removed)?;
        writeln!(f, "pairs reduced: {}", self.pairs_reduced)?;
        writeln!(f, "reductions to zero: {}", self.zero_reductions)?;
        writeln!(f, "max sugar: {}", self.max_sugar)?;
        write!(f, "basis size: {}", self.basis_size)
    }
}

struct Elem {
    v: MVec,
    lead: Monomial,
    comp: u32,
    mask: u64,
    sugar: u32,
    active: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: u32,
}

struct Engine<'a> {
    ring: &'a PolyRing,
    order: &'a ModOrder,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
    product_criterion: bool,
    /// Stop instead of failing once every remaining pair is above this degree.
    truncate: Option<u32>,
    truncated: bool,
    stats: GbStats,
}

impl<'a> Engine<'a> {
    fn find_reducer(&self, t: &MTerm, mask: u64) -> Option<usize> {
        self.basis
            .iter()
            .position(|e| e.active && e.comp == t.comp && e.mask & !mask == 0 && e.lead.divides(&t.mono))
    }

    /// Full reduction of `f` by the active basis. Returns the remainder and its sugar.
    fn reduce(&self, f: MVec, mut sugar: u32) -> (MVec, u32) {
        let mut done: MVec = Vec::new();
        let mut f = f;
        let mut pos = 0;
        while pos < f.len() {
            let t = f[pos];
            match self.find_reducer(&t, t.mono.short_mask()) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.lead.quotient_of(&t.mono);
                    sugar = sugar.max(g.sugar + self.ring.weighted_degree(&q));
                    f = module::sub_mul(self.ring, self.order, &f[pos..], t.coeff, &q, &g.v);
                    pos = 0;
                }
                None => {
                    done.push(t);
                    pos += 1;
                }
            }
        }
        (done, sugar)
    }

    fn spoly(&self, p: &Pair) -> MVec {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let qa = a.lead.quotient_of(&p.lcm);
        let qb = b.lead.quotient_of(&p.lcm);
        let sa = module::sub_mul(self.ring, self.order, &[], self.ring.field().neg(1), &qa, &a.v);
        // both monic, so the leads cancel
        module::sub_mul(self.ring, self.order, &sa, 1, &qb, &b.v)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let da = a.sugar + self.ring.weighted_degree(&a.lead.quotient_of(lcm));
        let db = b.sugar + self.ring.weighted_degree(&b.lead.quotient_of(lcm));
        da.max(db)
    }

    /// Inserts a reduced, monic, nonzero vector and updates the pair set.
    fn insert(&mut self, v: MVec, sugar: u32) {
        let lead = v[0].mono;
        let comp = v[0].comp;
        let k = self.basis.len();
        let new_mask = lead.short_mask();

        // chain criterion on existing pairs
        let before = self.pairs.len();
        self.pairs.retain(|p| {
            if p.comp != comp || !lead.divides(&p.lcm) {
                return true;
            }
            let li = self.basis[p.i].lead.lcm(&lead);
            let lj = self.basis[p.j].lead.lcm(&lead);
            li == p.lcm || lj == p.lcm
        });
        self.stats.pairs_removed += before - self.pairs.len();

        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, e) in self.basis.iter().enumerate() {
            if e.active && e.comp == comp {
                let coprime = self.product_criterion && e.lead.is_coprime(&lead);
                cands.push((i, e.lead.lcm(&lead), coprime));
            }
        }
        self.stats.pairs_created += cands.len();
        let ncands = cands.len();

        // drop candidates whose lcm is a proper multiple of another candidate's lcm
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && cands[b].1 != cands[a].1 && cands[b].1.divides(&cands[a].1) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // among equal lcms keep one, or none if any of them is coprime
        let mut selected: Vec<(usize, Monomial)> = Vec::new();
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            let l = cands[a].1;
            if selected.iter().any(|(_, s)| *s == l) {
                continue;
            }
            let any_coprime = (0..cands.len()).any(|b| keep[b] && cands[b].1 == l && cands[b].2);
            if !any_coprime {
                selected.push((cands[a].0, l));
            } else {
                // remember the lcm so later equal candidates are skipped too
                selected.push((usize::MAX, l));
            }
        }

        self.basis.push(Elem {
            v,
            lead,
            comp,
            mask: new_mask,
            sugar,
            active: true,
        });
        let mut added = 0;
        for (i, l) in selected {
            if i == usize::MAX {
                continue;
            }
            let s = self.pair_sugar(i, k, &l);
            self.pairs.push(Pair {
                i,
                j: k,
                lcm: l,
                comp,
                sugar: s,
            });
            added += 1;
        }
        self.stats.pairs_removed += ncands - added;

        for e in self.basis[..k].iter_mut() {
            if e.active && e.comp == comp && lead.divides(&e.lead) {
                e.active = false;
            }
        }
    }

    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        a.sugar
            .cmp(&b.sugar)
            .then_with(|| self.order.cmp(self.ring, &a.lcm, a.comp, &b.lcm, b.comp))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
    }

    fn run(&mut self, mut inputs: Vec<(u32, MVec)>) -> Result<()> {
        let cap = self.ring.degree_cap();
        inputs.sort_by_key(|(s, _)| *s);
        let mut inputs = inputs.into_iter().peekable();
        loop {
            let next_pair = self
                .pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| self.pair_cmp(a, b))
                .map(|(k, p)| (k, p.sugar));
            let take_input = match (inputs.peek(), next_pair) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some((s, _)), Some((_, ps))) => *s <= ps,
            };
            let (f, sugar) = if take_input {
                let (s, v) = inputs.next().unwrap();
                (v, s)
            } else {
                let (k, ps) = next_pair.unwrap();
                if self.truncate.is_some_and(|t| ps > t) {
                    // pairs come out by sugar, so the rest are all higher
                    self.truncated = true;
                    break;
                }
                let p = self.pairs.swap_remove(k);
                if self.ring.weighted_degree(&p.lcm) > cap || p.sugar > cap {
                    return Err(Error::DegreeBudget { degree: p.sugar, cap });
                }
                self.stats.pairs_reduced += 1;
                (self.spoly(&p), p.sugar)
            };
            self.stats.max_sugar = self.stats.max_sugar.max(sugar);
            let (mut h, s) = self.reduce(f, sugar);
            if h.is_empty() {
                if !take_input {
                    self.stats.zero_reductions += 1;
                }
                continue;
            }
            module::make_monic(self.ring, &mut h);
            self.insert(h, s);
        }
        Ok(())
    }

    /// Active elements, tail-reduced and sorted by increasing lead term.
    fn finish(mut self) -> Vec<MVec> {
        let active: Vec<usize> = (0..self.basis.len()).filter(|&i| self.basis[i].active).collect();
        for &i in &active {
            let v = std::mem::take(&mut self.basis[i].v);
            let head = v[0];
            self.basis[i].active = false;
            let (tail, _) = self.reduce(v[1..].to_vec(), 0);
            self.basis[i].active = true;
            let mut nv = Vec::with_capacity(tail.len() + 1);
            nv.push(head);
            nv.extend(tail);
            self.basis[i].v = nv;
        }
        let mut out: Vec<MVec> = active
            .into_iter()
            .map(|i| std::mem::take(&mut self.basis[i].v))
            .collect();
        out.sort_by(|a, b| self.order.cmp_terms(self.ring, &a[0], &b[0]));
        self.stats.basis_size = out.len();
        out
    }
}

fn prepare(ring: &PolyRing, order: &ModOrder, gens: Vec<MVec>) -> Vec<(u32, MVec)> {
    gens.into_iter()
        .filter(|v| !v.is_empty())
        .map(|mut v| {
            module::make_monic(ring, &mut v);
            let s = v.iter().map(|t| order.degree(ring, &t.mono, t.comp)).max().unwrap_or(0);
            (s, v)
        })
        .collect()
}

/// Reduced Groebner basis of the submodule generated by `gens` (each sorted in `order`).
pub fn module_gb(ring: &PolyRing, order: &ModOrder, gens: Vec<MVec>) -> Result<Vec<MVec>> {
    module_gb_with_stats(ring, order, gens, false).map(|(b, _)| b)
}

pub(crate) fn module_gb_with_stats(
    ring: &PolyRing,
    order: &ModOrder,
    gens: Vec<MVec>,
    product_criterion: bool,
) -> Result<(Vec<MVec>, GbStats)> {
    let inputs = prepare(ring, order, gens);
    let mut e = Engine {
        ring,
        order,
        basis: Vec::new(),
        pairs: Vec::new(),
        product_criterion,
        truncate: None,
        truncated: false,
        stats: GbStats::default(),
    };
    e.run(inputs)?;
    let stats_pre = e.stats.clone();
    let out = e.finish();
    let stats = GbStats {
        basis_size: out.len(),
        ..stats_pre
    };
    Ok((out, stats))
}

/// Normal form of `f` with respect to arbitrary vectors `g` (leads need not be monic).
pub fn module_normal_form(ring: &PolyRing, order: &ModOrder, f: &[MTerm], g: &[MVec]) -> MVec {
    let field = ring.field();
    let leads: Vec<(Monomial, u32, u64, u32)> = g
        .iter()
        .filter(|v| !v.is_empty())
        .map(|v| (v[0].mono, v[0].comp, v[0].mono.short_mask(), field.inv(v[0].coeff)))
        .collect();
    let gs: Vec<&MVec> = g.iter().filter(|v| !v.is_empty()).collect();
    let mut done: MVec = Vec::new();
    let mut f: MVec = f.to_vec();
    let mut pos = 0;
    while pos < f.len() {
        let t = f[pos];
        let mask = t.mono.short_mask();
        let hit = leads
            .iter()
            .position(|(m, c, mk, _)| *c == t.comp && mk & !mask == 0 && m.divides(&t.mono));
        match hit {
            Some(k) => {
                let q = leads[k].0.quotient_of(&t.mono);
                let c = field.mul(t.coeff, leads[k].3);
                f = module::sub_mul(ring, order, &f[pos..], c, &q, gs[k]);
                pos = 0;
            }
            None => {
                done.push(t);
                pos += 1;
            }
        }
    }
    done
}

/// A reduced Groebner basis of an ideal: monic, tail-reduced, sorted by
/// increasing lead monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGB {
    ring: PolyRing,
    basis: Vec<Polynomial>,
    vecs: Vec<MVec>,
}

impl ReducedGB {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|p| p.lead_monomial()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce_by(&self.ring, f, &self.vecs)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Reduction modulo a fixed list of polynomials, converted once.
#[derive(Clone, Debug)]
pub struct Reducer {
    ring: PolyRing,
    vecs: Vec<MVec>,
}

impl Reducer {
    pub fn new(ring: &PolyRing, g: &[Polynomial]) -> Self {
        Reducer {
            ring: ring.clone(),
            vecs: g.iter().map(|p| module::from_poly(p, 0)).collect(),
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce_by(&self.ring, f, &self.vecs)
    }
}

fn reduce_by(ring: &PolyRing, f: &Polynomial, gv: &[MVec]) -> Polynomial {
    let r = module_normal_form(ring, &rank_one(ring), &module::from_poly(f, 0), gv);
    module::to_poly(ring, &r)
}

fn rank_one(ring: &PolyRing) -> ModOrder {
    let _ = ring;
    ModOrder::top(1)
}

/// Normal form of `f` modulo the list `g` (not necessarily a Groebner basis).
pub fn normal_form(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    Reducer::new(f.ring(), g).normal_form(f)
}

fn check_ring(gens: &[Polynomial], ring: &PolyRing) -> Result<()> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch(format!("generator {g} is not in {ring:?}")));
        }
    }
    Ok(())
}

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger_in(ring: &PolyRing, gens: &[Polynomial]) -> Result<ReducedGB> {
    buchberger_with_stats(ring, gens).map(|(g, _)| g)
}

/// Reduced Groebner basis of the ideal generated by `gens` (nonempty).
pub fn buchberger(gens: &[Polynomial]) -> Result<ReducedGB> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::Precondition("empty generator list".into()))?
        .ring()
        .clone();
    buchberger_in(&ring, gens)
}

/// Like [`buchberger_in`], also returning S-pair statistics.
pub fn buchberger_with_stats(ring: &PolyRing, gens: &[Polynomial]) -> Result<(ReducedGB, GbStats)> {
    check_ring(gens, ring)?;
    let order = rank_one(ring);
    let vecs: Vec<MVec> = gens.iter().map(|p| module::from_poly(p, 0)).collect();
    let (basis, stats) = module_gb_with_stats(ring, &order, vecs, true)?;
    Ok((
        ReducedGB {
            ring: ring.clone(),
            basis: basis.iter().map(|v| module::to_poly(ring, v)).collect(),
            vecs: basis,
        },
        stats,
    ))
}

/// Groebner basis of a homogeneous ideal through degree `max_degree`: every
/// element of the ideal of degree at most `max_degree` reduces to zero modulo
/// the output. The flag is true when pairs above that degree were left over,
/// so the output may not be a basis of the whole ideal.
pub fn truncated_basis(ring: &PolyRing, gens: &[Polynomial], max_degree: u32) -> Result<(Vec<Polynomial>, bool)> {
    check_ring(gens, ring)?;
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(format!(
            "truncated bases need homogeneous input, got {g}"
        )));
    }
    let order = rank_one(ring);
    let vecs: Vec<MVec> = gens.iter().map(|p| module::from_poly(p, 0)).collect();
    let inputs = prepare(ring, &order, vecs);
    let mut e = Engine {
        ring,
        order: &order,
        basis: Vec::new(),
        pairs: Vec::new(),
        product_criterion: true,
        truncate: Some(max_degree.min(ring.degree_cap())),
        truncated: false,
        stats: GbStats::default(),
    };
    e.run(inputs)?;
    let truncated = e.truncated;
    let out = e.finish();
    Ok((out.iter().map(|v| module::to_poly(ring, v)).collect(), truncated))
}

/// Minimal generators of a homogeneous ideal: by increasing degree, keep `g`
/// iff it is neither in the ideal of the lower-degree generators kept so far
/// nor in the span of those kept in its own degree. A single Buchberger run
/// advances degree by degree, taking each kept generator as a new input.
pub fn minimal_generators(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    minimal_generators_in(ring, gens, None)
}

/// As [`minimal_generators`] when the Hilbert series of `R / (gens)` is
/// known: stops as soon as the generators kept so far reach it, without
/// reducing the remaining ones.
pub fn minimal_generators_with_series(
    ring: &PolyRing,
    gens: &[Polynomial],
    hs: &HilbertSeries,
) -> Result<Vec<Polynomial>> {
    minimal_generators_in(ring, gens, Some(hs))
}

fn done(ring: &PolyRing, e: &Engine, hs: &HilbertSeries) -> bool {
    let leads: Vec<Monomial> = e.basis.iter().map(|b| b.lead).collect();
    HilbertSeries {
        numerator: hilbert::monomial_numerator(ring, &leads),
        weights: ring.weights().to_vec(),
    }
    .same_series(hs)
}

fn minimal_generators_in(
    ring: &PolyRing,
    gens: &[Polynomial],
    target: Option<&HilbertSeries>,
) -> Result<Vec<Polynomial>> {
    check_ring(gens, ring)?;
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(format!(
            "minimal generators need homogeneous input, got {g}"
        )));
    }
    let mut items: Vec<(u32, &Polynomial)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.degree().unwrap_or(0), g))
        .collect();
    items.sort_by_key(|(d, _)| *d);
    let order = rank_one(ring);
    let mut e = Engine {
        ring,
        order: &order,
        basis: Vec::new(),
        pairs: Vec::new(),
        product_criterion: true,
        truncate: None,
        truncated: false,
        stats: GbStats::default(),
    };
    let mut kept = Vec::new();
    let mut pending: Vec<MVec> = Vec::new();
    let mut idx = 0;
    while idx < items.len() {
        let d = items[idx].0;
        let mut end = idx;
        while end < items.len() && items[end].0 == d {
            end += 1;
        }
        e.truncate = Some(d.min(ring.degree_cap()));
        e.run(prepare(ring, &order, std::mem::take(&mut pending)))?;
        if let Some(hs) = target {
            // the kept elements already span the ideal; the rest reduce to zero
            if e.pairs.is_empty() && idx > 0 && done(ring, &e, hs) {
                break;
            }
        }
        let mut ech: SparseEchelon<Monomial> = SparseEchelon::new(ring.field());
        for (_, g) in &items[idx..end] {
            let (nf, _) = e.reduce(module::from_poly(g, 0), d);
            if nf.is_empty() {
                continue;
            }
            if ech.insert(nf.iter().map(|t| (t.mono, t.coeff)).collect()) {
                kept.push((*g).clone());
                pending.push(module::from_poly(g, 0));
            }
        }
        idx = end;
    }
    Ok(kept)
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let (lf, lg) = (f.lead_term().unwrap(), g.lead_term().unwrap());
    let l = lf.mono.lcm(&lg.mono);
    let field = ring.field();
    let a = f
        .mul_term(field.inv(lf.coeff), &lf.mono.quotient_of(&l))
        .expect("lcm within exponent range");
    let b = g
        .mul_term(field.inv(lg.coeff), &lg.mono.quotient_of(&l))
        .expect("lcm within exponent range");
    &a - &b
}

/// Buchberger's criterion checked on every pair: all S-polynomials reduce to zero.
pub fn s_pair_certificate(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Relations among generators: each column `c` satisfies `sum_i c[i] * gens[i] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyMatrix {
    pub ring: PolyRing,
    /// Number of generators, i.e. the length of every column.
    pub rows: usize,
    pub columns: Vec<Vec<Polynomial>>,
    /// Degree of each column, taking generator `i` to have degree `deg gens[i]`.
    pub column_degrees: Vec<u32>,
}

impl SyzygyMatrix {
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.columns[col][row]
    }

    /// Exactness check: every column times the generator vector is zero.
    pub fn verify(&self, gens: &[Polynomial]) -> bool {
        self.columns.iter().all(|col| {
            let mut acc = Polynomial::zero(&self.ring);
            for (c, g) in col.iter().zip(gens) {
                acc = &acc + &(c * g);
            }
            acc.is_zero()
        })
    }
}

/// Syzygies of vectors `gens` in a free module of rank `rank` with degree
/// shifts `shifts`, by elimination in a position-over-term order on
/// `F + R^m`. Returns vectors in `R^m` whose components are shifted by the
/// generator degrees. Output is a Groebner basis of the syzygy module, not
/// necessarily minimal.
pub fn module_syzygies(ring: &PolyRing, rank: usize, shifts: &[u32], gens: &[MVec]) -> Result<(Vec<MVec>, Vec<u32>)> {
    let m = gens.len();
    let gen_order = ModOrder::Top {
        shifts: shifts.to_vec(),
    };
    let gdeg: Vec<u32> = gens
        .iter()
        .map(|g| {
            g.iter()
                .map(|t| gen_order.degree(ring, &t.mono, t.comp))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut all_shifts = shifts.to_vec();
    all_shifts.extend(gdeg.iter().copied());
    let order = ModOrder::Pot { shifts: all_shifts };
    let mut vecs = Vec::with_capacity(m);
    for (i, g) in gens.iter().enumerate() {
        let mut v: MVec = g.clone();
        v.push(MTerm {
            mono: Monomial::one(),
            comp: (rank + i) as u32,
            coeff: 1,
        });
        module::sort_vec(ring, &order, &mut v);
        vecs.push(v);
    }
    let basis = module_gb(ring, &order, vecs)?;
    let out_order = ModOrder::Top { shifts: gdeg.clone() };
    let mut syz = Vec::new();
    for v in basis {
        if (v[0].comp as usize) < rank {
            continue;
        }
        let mut s: MVec = v
            .into_iter()
            .map(|t| MTerm {
                comp: t.comp - rank as u32,
                ..t
            })
            .collect();
        module::sort_vec(ring, &out_order, &mut s);
        syz.push(s);
    }
    Ok((syz, gdeg))
}

/// Degree of a homogeneous vector under `order` (max over terms).
pub(crate) fn vec_degree(ring: &PolyRing, order: &ModOrder, v: &[MTerm]) -> u32 {
    v.iter().map(|t| order.degree(ring, &t.mono, t.comp)).max().unwrap_or(0)
}

/// Minimal generators of a graded submodule given by homogeneous vectors.
/// Processes by increasing degree and keeps a vector iff it is not in the
/// submodule generated by those kept so far.
pub fn minimalize_vectors(ring: &PolyRing, order: &ModOrder, vecs: Vec<MVec>) -> Result<Vec<MVec>> {
    let mut items: Vec<(u32, usize, MVec)> = vecs
        .into_iter()
        .filter(|v| !v.is_empty())
        .enumerate()
        .map(|(i, v)| (vec_degree(ring, order, &v), i, v))
        .collect();
    items.sort_by_key(|(d, i, _)| (*d, *i));
    let mut kept: Vec<MVec> = Vec::new();
    let mut idx = 0;
    while idx < items.len() {
        let d = items[idx].0;
        let mut end = idx;
        while end < items.len() && items[end].0 == d {
            end += 1;
        }
        let gb = if kept.is_empty() {
            Vec::new()
        } else {
            module_gb(ring, order, kept.clone())?
        };
        // normal forms mod the lower part span a complement; pick a basis of it
        let mut echelon = crate::linalg::SparseEchelon::new(ring.field());
        for item in &items[idx..end] {
            let nf = module_normal_form(ring, order, &item.2, &gb);
            if nf.is_empty() {
                continue;
            }
            let row: Vec<((Monomial, u32), u32)> = nf.iter().map(|t| ((t.mono, t.comp), t.coeff)).collect();
            if echelon.insert(row) {
                kept.push(item.2.clone());
            }
        }
        idx = end;
    }
    Ok(kept)
}

/// Syzygies of polynomials, minimalized when all generators are homogeneous.
pub fn syzygies(gens: &[Polynomial]) -> Result<SyzygyMatrix> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::Precondition("empty generator list".into()))?
        .ring()
        .clone();
    check_ring(gens, &ring)?;
    let vecs: Vec<MVec> = gens.iter().map(|p| module::from_poly(p, 0)).collect();
    let (mut syz, gdeg) = module_syzygies(&ring, 1, &[0], &vecs)?;
    let out_order = ModOrder::Top { shifts: gdeg };
    if gens.iter().all(|g| g.is_homogeneous()) {
        syz = minimalize_vectors(&ring, &out_order, syz)?;
    }
    let column_degrees = syz.iter().map(|v| vec_degree(&ring, &out_order, v)).collect();
    let columns = syz.iter().map(|v| module::to_columns(&ring, v, gens.len())).collect();
    Ok(SyzygyMatrix {
        ring,
        rows: gens.len(),
        columns,
        column_degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::standard(names, PrimeField::default()).unwrap()
    }

    fn polys(r: &PolyRing, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()
    }

    #[test]
    fn normal_form_basics() {
        let r = ring(&["x", "y"]);
        let g = polys(&r, &["x"]);
        assert!(normal_form(&polys(&r, &["x^2"])[0], &g).is_zero());
        let y = polys(&r, &["y"])[0].clone();
        assert_eq!(normal_form(&y, &g), y);
    }

    #[test]
    fn linear_basis_is_reduced() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&polys(&r, &["x", "x+y"])).unwrap();
        assert_eq!(gb.basis(), polys(&r, &["y", "x"]).as_slice());
    }

    #[test]
    fn monomial_ideal_drops_multiples() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&polys(&r, &["x^2", "x^2*y", "y^3", "x*y^4"])).unwrap();
        assert_eq!(gb.basis(), polys(&r, &["x^2", "y^3"]).as_slice());
    }

    #[test]
    fn twisted_cubic_certificate() {
        let r = ring(&["x", "y", "z", "w"]);
        let gens = polys(&r, &["x*z-y^2", "y*w-z^2", "x*w-y*z"]);
        let gb = buchberger(&gens).unwrap();
        assert!(s_pair_certificate(gb.basis()));
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"]);
        let gens = polys(&r, &["x", "y"]);
        let s = syzygies(&gens).unwrap();
        assert_eq!(s.ncols(), 1);
        assert!(s.verify(&gens));
        let col = &s.columns[0];
        // (y, -x) up to sign
        let yv = polys(&r, &["y"])[0].clone();
        assert!(col[0] == yv || col[0] == yv.neg());
        assert_eq!(s.column_degrees, vec![2]);
    }

    #[test]
    fn single_element_has_no_syzygies() {
        let r = ring(&["x", "y"]);
        let s = syzygies(&polys(&r, &["x^2+y^2"])).unwrap();
        assert_eq!(s.ncols(), 0);
    }

    #[test]
    fn degree_budget_is_reported() {
        let r = ring(&["x", "y", "z"]).with_degree_cap(3);
        let err = buchberger(&polys(&r, &["x^3-y^2*z", "x*y-z^2"])).unwrap_err();
        assert!(matches!(err, Error::DegreeBudget { cap: 3, .. }), "{err:?}");
    }
}
