//! Graded free resolutions via Schreyer frames, pruned to minimal ones, and
//! Koszul homology.

use crate::error::{Error, Result};
use crate::groebner::{self, SyzygyMatrix};
use crate::hilbert::{self, HilbertSeries};
use crate::ideal::{monomials_of_degree, Ideal};
use crate::module::{self, MTerm, MVec, ModOrder, SchreyerLevel};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::{MonomialOrder, PolyRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Matrix stored by columns; every column has `nrows` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub nrows: usize,
    pub columns: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.columns[c][r]
    }

    fn has_constant_entry(&self) -> bool {
        self.columns.iter().flatten().any(|p| !p.is_zero() && p.is_constant())
    }
}

/// `F_0 <- F_1 <- ... <- F_n`. `matrices[k]` is the map `F_{k+1} -> F_k`
/// and `shifts[k]` holds the generator degrees of `F_k`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: PolyRing,
    pub matrices: Vec<PolyMatrix>,
    pub shifts: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedBetti {
    /// `table[i]` maps a degree `j` to `beta_{i,j}`.
    pub table: Vec<BTreeMap<u32, usize>>,
}

impl FreeResolution {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    pub fn graded_betti(&self) -> GradedBetti {
        GradedBetti {
            table: self
                .shifts
                .iter()
                .map(|s| {
                    let mut m = BTreeMap::new();
                    for &d in s {
                        *m.entry(d).or_insert(0) += 1;
                    }
                    m
                })
                .collect(),
        }
    }

    /// Index of the last nonzero free module; `None` for the zero module.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.shifts.iter().rposition(|s| !s.is_empty())
    }

    pub fn is_minimal(&self) -> bool {
        self.matrices.iter().all(|m| !m.has_constant_entry())
    }

    /// Checks `d_k d_{k+1} = 0` and that the columns of `d_{k+1}` generate all
    /// syzygies of the columns of `d_k`.
    pub fn verify_exactness(&self) -> Result<bool> {
        let ring = &self.ring;
        for k in 0..self.matrices.len() {
            let dk = &self.matrices[k];
            let below = ModOrder::Top {
                shifts: self.shifts[k].clone(),
            };
            let order = ModOrder::Top {
                shifts: self.shifts[k + 1].clone(),
            };
            let cols: Vec<MVec> = dk
                .columns
                .iter()
                .map(|c| module::from_columns(ring, &below, c))
                .collect();
            let next: Vec<MVec> = match self.matrices.get(k + 1) {
                Some(m) => m
                    .columns
                    .iter()
                    .map(|c| module::from_columns(ring, &order, c))
                    .collect(),
                None => Vec::new(),
            };
            for v in &next {
                let mut img: MVec = Vec::new();
                for t in v {
                    let col = &cols[t.comp as usize];
                    let minus = ring.field().neg(t.coeff);
                    img = module::sub_mul(ring, &below, &img, minus, &t.mono, col);
                }
                if !img.is_empty() {
                    return Ok(false);
                }
            }
            let (syz, _) = groebner::module_syzygies(ring, dk.nrows, &self.shifts[k], &cols)?;
            let gb = groebner::module_gb(ring, &order, next)?;
            for s in syz {
                let mut s = s;
                module::sort_vec(ring, &order, &mut s);
                if !groebner::module_normal_form(ring, &order, &s, &gb).is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Same ring with a degree-compatible order, so that the Top order is cheap.
fn graded_ring(ring: &PolyRing) -> Result<PolyRing> {
    match ring.order() {
        MonomialOrder::GRevLex | MonomialOrder::WeightedGRevLex => Ok(ring.clone()),
        _ if ring.is_standard_graded() => ring.with_order(MonomialOrder::GRevLex),
        _ => ring.with_order(MonomialOrder::WeightedGRevLex),
    }
}

/// Minimal free resolution of `R / A`.
pub fn free_resolution(a: &Ideal) -> Result<FreeResolution> {
    if !a.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("{a:?}")));
    }
    let ring = graded_ring(a.ring())?;
    let gens: Vec<MVec> = a
        .gens()
        .iter()
        .map(|g| Ok(module::from_poly(&g.rebase(&ring)?, 0)))
        .collect::<Result<_>>()?;
    let mut res = resolve(&ring, &[0], gens)?;
    res.ring = a.ring().clone();
    rebase_matrices(&mut res)?;
    Ok(res)
}

/// Minimal free resolution of `F / M` where `F` has the given shifts and
/// `M` is generated by homogeneous `relations`.
pub fn resolve_module(ring: &PolyRing, shifts: &[u32], relations: &[MVec]) -> Result<FreeResolution> {
    let order = ModOrder::Top {
        shifts: shifts.to_vec(),
    };
    if !relations.iter().all(|v| module::is_homogeneous(ring, &order, v)) {
        return Err(Error::NotHomogeneous("module relations".into()));
    }
    let gring = graded_ring(ring)?;
    let rels: Vec<MVec> = if &gring == ring {
        relations.to_vec()
    } else {
        relations
            .iter()
            .map(|v| {
                let mut v = v.clone();
                module::sort_vec(&gring, &order, &mut v);
                v
            })
            .collect()
    };
    let mut res = resolve(&gring, shifts, rels)?;
    res.ring = ring.clone();
    rebase_matrices(&mut res)?;
    Ok(res)
}

fn rebase_matrices(res: &mut FreeResolution) -> Result<()> {
    for m in res.matrices.iter_mut() {
        for col in m.columns.iter_mut() {
            for p in col.iter_mut() {
                *p = p.rebase(&res.ring)?;
            }
        }
    }
    Ok(())
}

/// Lead term first: by component, then lex-descending monomial. This order
/// of basis elements makes the frame length at most the number of variables.
fn sort_level(v: &mut [MVec]) {
    v.sort_by(|a, b| a[0].comp.cmp(&b[0].comp).then_with(|| b[0].mono.cmp(&a[0].mono)));
}

/// Reduces `f` to zero by `elems`, returning the quotient vector
/// `sum q_u e_u` with `f = sum q_u elems[u]`.
fn divide_to_zero(ring: &PolyRing, order: &ModOrder, mut f: MVec, elems: &[MVec], masks: &[u64]) -> Result<MVec> {
    let field = ring.field();
    let mut quot: MVec = Vec::new();
    while let Some(t) = f.first().copied() {
        let mask = t.mono.short_mask();
        let u = (0..elems.len())
            .find(|&u| {
                let l = &elems[u][0];
                l.comp == t.comp && masks[u] & !mask == 0 && l.mono.divides(&t.mono)
            })
            .ok_or_else(|| Error::Construction("Schreyer frame: S-vector does not reduce to zero".into()))?;
        let l = &elems[u][0];
        let q = l.mono.quotient_of(&t.mono);
        let c = field.mul(t.coeff, field.inv(l.coeff));
        f = module::sub_mul(ring, order, &f, c, &q, &elems[u]);
        quot.push(MTerm {
            mono: q,
            comp: u as u32,
            coeff: c,
        });
    }
    Ok(quot)
}

/// Syzygies of a level from its minimal-lead pairs; a Groebner basis of the
/// syzygy module in the Schreyer order `upper`.
fn frame_syzygies(ring: &PolyRing, lower: &ModOrder, upper: &ModOrder, elems: &[MVec]) -> Result<Vec<MVec>> {
    let field = ring.field();
    let masks: Vec<u64> = elems.iter().map(|v| v[0].mono.short_mask()).collect();
    let mut out = Vec::new();
    for a in 0..elems.len() {
        let la = elems[a][0];
        let mut cands: Vec<(crate::monomial::Monomial, usize)> = Vec::new();
        for b in a + 1..elems.len() {
            let lb = elems[b][0];
            if lb.comp != la.comp {
                continue;
            }
            let lcm = la.mono.lcm(&lb.mono);
            cands.push((la.mono.quotient_of(&lcm), b));
        }
        cands.sort_by_key(|(m, b)| (m.total_degree(), *b));
        let mut kept: Vec<(crate::monomial::Monomial, usize)> = Vec::new();
        for (m, b) in cands {
            if !kept.iter().any(|(k, _)| k.divides(&m)) {
                kept.push((m, b));
            }
        }
        for (mab, b) in kept {
            let lb = elems[b][0];
            let lcm = la.mono.mul(&mab);
            let mba = lb.mono.quotient_of(&lcm);
            let ca = la.coeff;
            let cb = lb.coeff;
            // cb * mab * g_a - ca * mba * g_b has cancelling leads
            let sa = module::sub_mul(ring, lower, &[], field.neg(cb), &mab, &elems[a]);
            let s = module::sub_mul(ring, lower, &sa, ca, &mba, &elems[b]);
            let quot = divide_to_zero(ring, lower, s, elems, &masks)?;
            let mut v: MVec = Vec::with_capacity(quot.len() + 2);
            v.push(MTerm {
                mono: mab,
                comp: a as u32,
                coeff: cb,
            });
            v.push(MTerm {
                mono: mba,
                comp: b as u32,
                coeff: field.neg(ca),
            });
            for t in quot {
                v.push(MTerm {
                    coeff: field.neg(t.coeff),
                    ..t
                });
            }
            module::sort_vec(ring, upper, &mut v);
            debug_assert!(v[0].comp == a as u32 && v[0].mono == mab);
            module::make_monic(ring, &mut v);
            out.push(v);
        }
    }
    Ok(out)
}

fn resolve(ring: &PolyRing, shifts: &[u32], gens: Vec<MVec>) -> Result<FreeResolution> {
    let base = Arc::new(ModOrder::Top {
        shifts: shifts.to_vec(),
    });
    let mut level_elems = groebner::module_gb(ring, &base, gens)?;
    let mut lower: ModOrder = (*base).clone();
    let mut frame: Vec<(Vec<MVec>, usize)> = Vec::new();
    let mut all_shifts: Vec<Vec<u32>> = vec![shifts.to_vec()];
    let mut below: Option<Arc<SchreyerLevel>> = None;
    let max_len = ring.nvars() + 1;
    while !level_elems.is_empty() {
        if frame.len() >= max_len {
            return Err(Error::IterationCap {
                stage: "Schreyer frame length".into(),
                cap: max_len,
            });
        }
        sort_level(&mut level_elems);
        let leads: Vec<_> = level_elems.iter().map(|v| (v[0].mono, v[0].comp)).collect();
        let level = Arc::new(match &below {
            None => SchreyerLevel::first(ring, base.clone(), &leads),
            Some(b) => SchreyerLevel::next(ring, b.clone(), &leads),
        });
        let upper = ModOrder::Schreyer(level.clone());
        let next = frame_syzygies(ring, &lower, &upper, &level_elems)?;
        all_shifts.push(level.deg.clone());
        let rank_below = all_shifts[all_shifts.len() - 2].len();
        frame.push((level_elems, rank_below));
        level_elems = next;
        lower = upper;
        below = Some(level);
    }
    let matrices = frame
        .into_iter()
        .map(|(elems, nrows)| PolyMatrix {
            nrows,
            columns: elems.iter().map(|v| module::to_columns(ring, v, nrows)).collect(),
        })
        .collect();
    let mut res = FreeResolution {
        ring: ring.clone(),
        matrices,
        shifts: all_shifts,
    };
    prune(&mut res);
    Ok(res)
}

fn find_unit(m: &PolyMatrix) -> Option<(usize, usize, u32)> {
    for (c, col) in m.columns.iter().enumerate() {
        for (r, p) in col.iter().enumerate() {
            if !p.is_zero() && p.is_constant() {
                return Some((r, c, p.lead_coeff()));
            }
        }
    }
    None
}

/// Cancels unit entries until the resolution is minimal.
fn prune(res: &mut FreeResolution) {
    let field = *res.ring.field();
    for k in 0..res.matrices.len() {
        while let Some((r, c, u)) = find_unit(&res.matrices[k]) {
            let inv = field.inv(u);
            let m = &mut res.matrices[k];
            let pivot = m.columns[c].clone();
            for (cc, col) in m.columns.iter_mut().enumerate() {
                if cc == c || col[r].is_zero() {
                    continue;
                }
                let lambda = col[r].scale(inv);
                for (e, p) in col.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *e = &*e - &(&lambda * p);
                    }
                }
            }
            m.columns.remove(c);
            for col in m.columns.iter_mut() {
                col.remove(r);
            }
            m.nrows -= 1;
            res.shifts[k].remove(r);
            res.shifts[k + 1].remove(c);
            if k > 0 {
                res.matrices[k - 1].columns.remove(r);
            }
            if let Some(up) = res.matrices.get_mut(k + 1) {
                for col in up.columns.iter_mut() {
                    col.remove(c);
                }
                up.nrows -= 1;
            }
        }
    }
    while res.shifts.len() > 1 && res.shifts.last().is_some_and(|s| s.is_empty()) {
        res.shifts.pop();
        res.matrices.pop();
    }
}

/// Depth of `R / A` by Auslander-Buchsbaum. `None` when `A` is the unit ideal.
pub fn depth_of_quotient(a: &Ideal) -> Result<Option<usize>> {
    let res = free_resolution(a)?;
    Ok(res.projective_dimension().map(|pd| a.ring().nvars() - pd))
}

/// Cohen-Macaulayness of `R / A` through a system of parameters `θ` made of
/// general elements of `R_w`, one variable weight `w` at a time: the
/// quotient is CM iff `HS(R / (A + θ)) = HS(R / A) prod (1 - t^{deg θ_i})`.
/// Avoids resolving ideals whose Groebner bases are too large for a Schreyer
/// frame. `None` when no system of parameters of that shape turns up.
pub fn cohen_macaulay_by_parameters(a: &Ideal, seed: u64) -> Result<Option<bool>> {
    let hs = hilbert::hilbert_series_of_quotient(a)?;
    cohen_macaulay_by_parameters_with_series(a, &hs, seed)
}

/// As [`cohen_macaulay_by_parameters`], with the Hilbert series of `R/A`
/// supplied by the caller. A basis of `A` itself is never computed.
pub fn cohen_macaulay_by_parameters_with_series(a: &Ideal, hs: &HilbertSeries, seed: u64) -> Result<Option<bool>> {
    let Some(dim) = hs.dimension() else {
        return Ok(Some(true));
    };
    let ring = a.ring();
    let p = ring.field().characteristic();
    let mut degrees = ring.weights().to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    let spans: Vec<Vec<Monomial>> = degrees.iter().map(|&w| monomials_of_degree(ring, w)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = a.clone();
    let mut cur_dim = dim;
    let mut params = Vec::with_capacity(dim);
    // any system of parameters decides the question; single variables keep
    // the bases sparse, so they are tried before general elements
    let mut unused: Vec<usize> = (0..ring.nvars()).collect();
    while cur_dim > 0 {
        let mut advanced = false;
        for pos in 0..unused.len() {
            let v = unused[pos];
            let next = cur.add_gens(&[Polynomial::var(ring, v)])?;
            if hilbert::dimension(&next)? == Some(cur_dim - 1) {
                cur = next;
                cur_dim -= 1;
                params.push(ring.weights()[v]);
                unused.remove(pos);
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        for (&w, span) in degrees.iter().zip(&spans) {
            let terms = span
                .iter()
                .map(|&mono| Term {
                    coeff: rng.gen_range(1..p),
                    mono,
                })
                .collect();
            let next = cur.add_gens(&[Polynomial::from_terms(ring, terms)])?;
            if hilbert::dimension(&next)? == Some(cur_dim - 1) {
                cur = next;
                cur_dim -= 1;
                params.push(w);
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(None);
        }
    }
    let mut cut = hilbert::hilbert_series_of_quotient(&cur)?;
    cut.weights.extend(params);
    Ok(Some(cut.same_series(hs)))
}

/// `depth R/A == dim R/A`; the zero ring counts as Cohen-Macaulay.
pub fn is_cohen_macaulay(a: &Ideal) -> Result<bool> {
    let depth = depth_of_quotient(a)?;
    let dim = hilbert::dimension(a)?;
    Ok(depth == dim)
}

/// Hilbert series of the module `F / M`.
pub fn module_hilbert_series(ring: &PolyRing, shifts: &[u32], relations: &[MVec]) -> Result<HilbertSeries> {
    let order = ModOrder::Top {
        shifts: shifts.to_vec(),
    };
    let gb = groebner::module_gb(ring, &order, relations.to_vec())?;
    let leads: Vec<_> = gb.iter().map(|v| (v[0].mono, v[0].comp)).collect();
    Ok(hilbert::module_hilbert_series(ring, shifts, &leads))
}

/// Depth and Krull dimension of `F / M`; both `None` for the zero module.
pub fn module_depth_and_dim(
    ring: &PolyRing,
    shifts: &[u32],
    relations: &[MVec],
) -> Result<(Option<usize>, Option<usize>)> {
    let res = resolve_module(ring, shifts, relations)?;
    let depth = res.projective_dimension().map(|pd| ring.nvars() - pd);
    let dim = module_hilbert_series(ring, shifts, relations)?.dimension();
    Ok((depth, dim))
}

/// Cap on the number of Koszul generators (the complex has `2^n` basis elements).
pub const KOSZUL_MAX_GENS: usize = 8;

/// `H_i` of the Koszul complex, presented as the cokernel of
/// `presentation` on free generators of degrees `generator_degrees`.
#[derive(Clone, Debug)]
pub struct KoszulHomologyModule {
    pub index: usize,
    pub generator_degrees: Vec<u32>,
    pub presentation: SyzygyMatrix,
}

impl KoszulHomologyModule {
    fn relations(&self) -> Vec<MVec> {
        let order = ModOrder::Top {
            shifts: self.generator_degrees.clone(),
        };
        self.presentation
            .columns
            .iter()
            .map(|c| module::from_columns(&self.presentation.ring, &order, c))
            .collect()
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.hilbert_series()?.is_zero())
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        module_hilbert_series(&self.presentation.ring, &self.generator_degrees, &self.relations())
    }

    /// `(depth, dim)`, both `None` for the zero module.
    pub fn depth_and_dim(&self) -> Result<(Option<usize>, Option<usize>)> {
        module_depth_and_dim(&self.presentation.ring, &self.generator_degrees, &self.relations())
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|s| s.count_ones() as usize == k).collect()
}

/// Koszul differential `K_i -> K_{i-1}` as vectors in `K_{i-1}`.
fn koszul_columns(ring: &PolyRing, gens: &[Polynomial], i: usize, order: &ModOrder) -> Vec<MVec> {
    let n = gens.len();
    let src = subsets_of_size(n, i);
    let dst = subsets_of_size(n, i - 1);
    let index: BTreeMap<u32, usize> = dst.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    src.iter()
        .map(|&s| {
            let mut v: MVec = Vec::new();
            let mut pos = 0;
            for j in 0..n {
                if s & (1 << j) == 0 {
                    continue;
                }
                let target = index[&(s & !(1 << j))] as u32;
                let g = if pos % 2 == 0 { gens[j].clone() } else { gens[j].neg() };
                v.extend(module::from_poly(&g, target));
                pos += 1;
            }
            module::sort_vec(ring, order, &mut v);
            v
        })
        .collect()
}

fn koszul_shifts(gens: &[Polynomial], i: usize) -> Vec<u32> {
    let degs: Vec<u32> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    subsets_of_size(gens.len(), i)
        .into_iter()
        .map(|s| (0..gens.len()).filter(|j| s & (1 << j) != 0).map(|j| degs[j]).sum())
        .collect()
}

/// `H_i(a_1..a_n)` as a quotient of a kernel by an image.
pub fn koszul_homology(gens: &[Polynomial], i: usize) -> Result<KoszulHomologyModule> {
    let n = gens.len();
    if n == 0 {
        return Err(Error::Precondition("empty generator list".into()));
    }
    if n > KOSZUL_MAX_GENS {
        return Err(Error::IterationCap {
            stage: "Koszul complex".into(),
            cap: KOSZUL_MAX_GENS,
        });
    }
    if i > n {
        return Err(Error::Precondition(format!("index {i} exceeds {n} generators")));
    }
    if !gens.iter().all(|g| g.is_homogeneous() && !g.is_zero()) {
        return Err(Error::NotHomogeneous("Koszul generators".into()));
    }
    let ring = gens[0].ring().clone();
    let shifts_i = koszul_shifts(gens, i);
    let order_i = ModOrder::Top {
        shifts: shifts_i.clone(),
    };
    // kernel generators of d_i, as vectors in K_i
    let kernel: Vec<MVec> = if i == 0 {
        vec![vec![MTerm {
            mono: crate::monomial::Monomial::one(),
            comp: 0,
            coeff: 1,
        }]]
    } else {
        let shifts_below = koszul_shifts(gens, i - 1);
        let order_below = ModOrder::Top {
            shifts: shifts_below.clone(),
        };
        let cols = koszul_columns(&ring, gens, i, &order_below);
        let (syz, _) = groebner::module_syzygies(&ring, shifts_below.len(), &shifts_below, &cols)?;
        let syz: Vec<MVec> = syz
            .into_iter()
            .map(|mut v| {
                module::sort_vec(&ring, &order_i, &mut v);
                v
            })
            .collect();
        groebner::minimalize_vectors(&ring, &order_i, syz)?
    };
    let image: Vec<MVec> = if i == n {
        Vec::new()
    } else {
        koszul_columns(&ring, gens, i + 1, &order_i)
    };
    let p = kernel.len();
    let kdeg: Vec<u32> = kernel
        .iter()
        .map(|v| groebner::vec_degree(&ring, &order_i, v))
        .collect();
    let mut all: Vec<MVec> = kernel;
    all.extend(image);
    let (syz, _) = groebner::module_syzygies(&ring, shifts_i.len(), &shifts_i, &all)?;
    let pres_order = ModOrder::Top { shifts: kdeg.clone() };
    let rels: Vec<MVec> = syz
        .into_iter()
        .map(|v| {
            let mut w: MVec = v.into_iter().filter(|t| (t.comp as usize) < p).collect();
            module::sort_vec(&ring, &pres_order, &mut w);
            w
        })
        .filter(|w| !w.is_empty())
        .collect();
    let rels = groebner::minimalize_vectors(&ring, &pres_order, rels)?;
    let column_degrees = rels
        .iter()
        .map(|v| groebner::vec_degree(&ring, &pres_order, v))
        .collect();
    let columns = rels.iter().map(|v| module::to_columns(&ring, v, p)).collect();
    Ok(KoszulHomologyModule {
        index: i,
        generator_degrees: kdeg,
        presentation: SyzygyMatrix {
            ring,
            rows: p,
            columns,
            column_degrees,
        },
    })
}

/// Per-index data used by the sliding depth and strongly Cohen-Macaulay tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulDepthRow {
    pub index: usize,
    pub depth: Option<usize>,
    pub dim: Option<usize>,
}

/// Depth and dimension of `H_i` of the minimal generators for `0 <= i <= n - g`.
pub fn koszul_depth_table(a: &Ideal) -> Result<Vec<KoszulDepthRow>> {
    let gens = a.min_gens()?;
    let n = gens.len();
    let g = hilbert::height(a)?.min(n);
    let mut rows = Vec::new();
    for i in 0..=n - g {
        let h = koszul_homology(&gens, i)?;
        let (depth, dim) = h.depth_and_dim()?;
        rows.push(KoszulDepthRow { index: i, depth, dim });
    }
    Ok(rows)
}

/// `depth H_i >= d - n + i` for `0 <= i <= n - g`.
pub fn sliding_depth_check(a: &Ideal) -> Result<bool> {
    let d = a.ring().nvars() as i64;
    let n = a.mu()? as i64;
    Ok(koszul_depth_table(a)?.iter().all(|row| match row.depth {
        None => true,
        Some(depth) => depth as i64 >= d - n + row.index as i64,
    }))
}

/// Every nonzero `H_i` is Cohen-Macaulay.
pub fn strongly_cm_check(a: &Ideal) -> Result<bool> {
    Ok(koszul_depth_table(a)?.iter().all(|row| row.depth == row.dim))
}
