//! Presentations of the Rees algebra, associated graded ring and fiber cone
//! as quotients of `k[T, x]` and `k[T]`.

use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert::{self, HilbertSeries};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution;
use crate::ring::{MonomialOrder, PolyRing};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct BlowupPresentation {
    /// Minimal generators `f_1..f_n` of `I` in the base ring.
    pub generators: Vec<Polynomial>,
    /// `k[T_1..T_n, x_1..x_d]`.
    pub ambient: PolyRing,
    pub rees_ideal: Ideal,
    pub agr_ideal: Ideal,
    /// `k[T_1..T_n]`, standard graded.
    pub fiber_ring: PolyRing,
    pub fiber_ideal: Ideal,
    /// Number of variables of the base ring.
    pub base_vars: usize,
}

/// Depth, dimension and Cohen-Macaulayness of one blowup algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraDepth {
    pub depth: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
}

fn t_names(ring: &PolyRing, n: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        out.push(ring.fresh_name(&format!("T{j}")));
    }
    out
}

fn check_size(i: &Ideal, extra: usize) -> Result<(Vec<Polynomial>, Vec<u32>)> {
    if i.is_zero() {
        return Err(Error::Precondition("the zero ideal has no Rees presentation".into()));
    }
    let gens = i.min_gens()?;
    let need = i.ring().nvars() + gens.len() + extra;
    if need > crate::monomial::MAX_VARS {
        return Err(Error::InvalidRing(format!(
            "{need} variables needed for the Rees presentation"
        )));
    }
    let degs = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    Ok((gens, degs))
}

/// `k[T, x]` with `T_j` of degree `deg f_j`, or standard graded when the base
/// is standard graded and `I` is equigenerated (the Rees ideal is then
/// bihomogeneous). The `T` come first: with the base variables last in
/// grevlex, bases of the Rees ideal plus forms in `x` stay small.
fn ambient_ring(base: &PolyRing, degs: &[u32]) -> Result<PolyRing> {
    let n = degs.len();
    let mut names = t_names(base, n);
    names.extend(base.names().iter().cloned());
    let equi = degs.iter().all(|&e| e == degs[0]);
    let ring = if equi && base.is_standard_graded() {
        PolyRing::new(names, vec![1; n + base.nvars()], MonomialOrder::GRevLex, *base.field())?
    } else {
        let mut weights = degs.to_vec();
        weights.extend_from_slice(base.weights());
        PolyRing::new(names, weights, MonomialOrder::WeightedGRevLex, *base.field())?
    };
    Ok(ring.with_degree_cap(base.degree_cap()))
}

/// Base variable `k` sits at `offset + k`.
fn shifted(d: usize, offset: usize) -> Vec<Option<usize>> {
    (0..d).map(|k| Some(offset + k)).collect()
}

/// The Rees ideal as `Sym : f_1^∞`, where `Sym` is generated by the linear
/// forms `sum_i c_i T_i` of the syzygies `c` of `I`. Inverting `f_1` makes
/// `I` principal, so the saturation kills exactly the torsion of `Sym(I)`.
///
/// The saturation adjoins `u` for `f_1`, last in weighted grevlex: dividing a
/// homogeneous basis of `Sym + (u - f_1)` by powers of `u` gives a basis of
/// the saturation, and `u -> f_1` maps it back.
fn rees_ideal_by_saturation(gens: &[Polynomial], ambient: &PolyRing) -> Result<(Ideal, HilbertSeries)> {
    let d = gens[0].ring().nvars();
    let n = gens.len();
    let pivot = (0..n).min_by_key(|&j| gens[j].degree()).unwrap_or(0);
    let mut names = ambient.names().to_vec();
    names.push(ambient.fresh_name("u"));
    let mut weights = ambient.weights().to_vec();
    weights.push(gens[pivot].degree().unwrap_or(1).max(1));
    let aux = PolyRing::new(names, weights, MonomialOrder::WeightedGRevLex, *ambient.field())?
        .with_degree_cap(ambient.degree_cap());
    let u = n + d;
    let lift = shifted(d, n);
    let mut rel = Vec::new();
    if n > 1 {
        let syz = groebner::syzygies(gens)?;
        for col in &syz.columns {
            let mut form = Polynomial::zero(&aux);
            for (j, c) in col.iter().enumerate() {
                let tj = Polynomial::var(&aux, j);
                form = form.checked_add(&c.map_vars(&aux, &lift)?.checked_mul(&tj)?)?;
            }
            if !form.is_zero() {
                rel.push(form);
            }
        }
    }
    if rel.is_empty() {
        let free = HilbertSeries {
            numerator: vec![1],
            weights: ambient.weights().to_vec(),
        };
        return Ok((Ideal::zero(ambient), free));
    }
    let f = gens[pivot].map_vars(ambient, &lift)?;
    rel.push(Polynomial::var(&aux, u).checked_sub(&gens[pivot].map_vars(&aux, &lift)?)?);
    let mut images: Vec<Polynomial> = (0..n + d).map(|k| Polynomial::var(ambient, k)).collect();
    images.push(f.clone());
    let cap = aux.degree_cap();
    let top_input = rel.iter().filter_map(|g| g.degree()).max().unwrap_or(1);
    let mut bound = (2 * top_input).max(SATURATION_START_DEGREE).min(cap);
    loop {
        // a basis truncated at `bound` still divides down to elements of the
        // saturation; it is all of it once f_1 is a nonzerodivisor modulo it
        let (basis, truncated) = groebner::truncated_basis(&aux, &rel, bound)?;
        let mut out = Vec::with_capacity(basis.len());
        let mut leads = Vec::with_capacity(basis.len());
        for g in &basis {
            let stripped = strip_power(g, u);
            leads.extend(stripped.lead_monomial());
            let back = stripped.substitute(ambient, &images)?;
            if !back.is_zero() {
                out.push(back);
            }
        }
        let l = Ideal::new(ambient, out)?;
        if !truncated {
            // the stripped basis is a basis of the saturation upstairs, which
            // contains u - f_1, so its quotient has the series of A / l
            let hs = HilbertSeries {
                numerator: hilbert::monomial_numerator(&aux, &leads),
                weights: aux.weights().to_vec(),
            };
            return Ok((l, hs));
        }
        match is_nonzerodivisor(&l, &f) {
            Ok(true) => {
                let hs = hilbert::hilbert_series_of_quotient(&l)?;
                return Ok((l, hs));
            }
            Ok(false) => {}
            // an incomplete truncation can make the test itself blow up
            Err(Error::DegreeBudget { .. }) => {}
            Err(e) => return Err(e),
        }
        if bound >= cap {
            return Err(Error::DegreeBudget { degree: bound + 1, cap });
        }
        bound = (2 * bound).min(cap);
    }
}

const SATURATION_START_DEGREE: u32 = 64;

/// `g / u^k` for the largest `k` with `u^k | g`.
fn strip_power(g: &Polynomial, u: usize) -> Polynomial {
    let k = g.terms().iter().map(|t| t.mono.exp(u)).min().unwrap_or(0);
    if k == 0 {
        return g.clone();
    }
    let terms = g
        .terms()
        .iter()
        .map(|t| {
            let mut t = t.clone();
            t.mono.set_exp(u, (t.mono.exp(u) - k) as u8);
            t
        })
        .collect();
    Polynomial::from_terms(g.ring(), terms)
}

/// Whether homogeneous `f` is a nonzerodivisor on `A / l`, by comparing
/// `HS(A / (l + f)) / (1 - t^e)` with `HS(A / l)`.
fn is_nonzerodivisor(l: &Ideal, f: &Polynomial) -> Result<bool> {
    let e = f.degree().unwrap_or(0);
    if e == 0 {
        return Ok(!f.is_zero());
    }
    let hs = hilbert::hilbert_series_of_quotient(l)?;
    let mut cut = hilbert::hilbert_series_of_quotient(&l.add_gens(&[f.clone()])?)?;
    cut.weights.push(e);
    Ok(cut.same_series(&hs))
}

/// The Rees ideal as `(T_j - f_j t) ∩ k[T, x]`, returned in `ambient`.
pub fn rees_ideal_by_elimination(i: &Ideal, ambient: &PolyRing) -> Result<Ideal> {
    let (gens, degs) = check_size(i, 1)?;
    let base = i.ring();
    let d = base.nvars();
    let n = gens.len();
    // x before T: the other way round the equigenerated eliminations blow up
    let mut names = vec![ambient.fresh_name("t")];
    names.extend(base.names().iter().cloned());
    names.extend(ambient.names()[..n].iter().cloned());
    let mut weights = vec![1];
    weights.extend(base.weights().iter().copied());
    weights.extend(degs.iter().map(|e| e + 1));
    let big = PolyRing::new(names, weights, MonomialOrder::BlockElimination(1), *base.field())?
        .with_degree_cap(base.degree_cap());
    let t = Polynomial::var(&big, 0);
    let lift = shifted(d, 1);
    let mut rel = Vec::with_capacity(n);
    for (j, g) in gens.iter().enumerate() {
        let tj = Polynomial::var(&big, 1 + d + j);
        let fj = g.map_vars(&big, &lift)?;
        rel.push(tj.checked_sub(&fj.checked_mul(&t)?)?);
    }
    let to_ambient: Vec<Option<usize>> = (0..d).map(|k| Some(n + k)).chain((0..n).map(Some)).collect();
    Ideal::new(&big, rel)?.eliminate(&[0])?.map_vars(ambient, &to_ambient)
}

/// Presentation of `R(I)`, `G(I)` and `F(I)` as quotients of `k[T, x]` and `k[T]`.
pub fn rees_presentation(i: &Ideal) -> Result<BlowupPresentation> {
    let (gens, degs) = check_size(i, 1)?;
    let base = i.ring();
    let d = base.nvars();
    let n = gens.len();
    let ambient = ambient_ring(base, &degs)?;
    // elimination is fast on equigenerated ideals and hopeless on mixed
    // degrees, where the weights on T force very high degrees
    let equi = degs.iter().all(|&e| e == degs[0]);
    let rees_ideal = if equi {
        let e = rees_ideal_by_elimination(i, &ambient)?;
        Ideal::new(&ambient, e.min_gens()?)?
    } else {
        let (l, hs) = rees_ideal_by_saturation(&gens, &ambient)?;
        Ideal::new(
            &ambient,
            groebner::minimal_generators_with_series(&ambient, l.gens(), &hs)?,
        )?
    };
    let lift = shifted(d, n);
    let mut agr_gens = rees_ideal.gens().to_vec();
    for g in &gens {
        agr_gens.push(g.map_vars(&ambient, &lift)?);
    }
    let agr_ideal = Ideal::new(&ambient, agr_gens)?;
    let fiber_ring = PolyRing::standard(&ambient.names()[..n], *base.field())?.with_degree_cap(base.degree_cap());
    let to_fiber: Vec<Option<usize>> = (0..n + d).map(|k| (k < n).then_some(k)).collect();
    let mut fiber_gens = Vec::new();
    for g in rees_ideal.gens() {
        let kept: Vec<_> = g
            .terms()
            .iter()
            .filter(|t| (n..n + d).all(|k| t.mono.exp(k) == 0))
            .cloned()
            .collect();
        if kept.is_empty() {
            continue;
        }
        let p = Polynomial::from_terms(&ambient, kept);
        fiber_gens.push(p.map_vars(&fiber_ring, &to_fiber)?);
    }
    let fiber_ideal = Ideal::new(&fiber_ring, fiber_gens)?;
    Ok(BlowupPresentation {
        generators: gens,
        ambient,
        rees_ideal,
        agr_ideal,
        fiber_ring,
        fiber_ideal,
        base_vars: d,
    })
}

/// Seed of the general linear forms in the parameter test.
const PARAMETER_SEED: u64 = 0x5eed;

fn algebra_depth(a: &Ideal) -> Result<AlgebraDepth> {
    // presentations often have bases too large to resolve; settle the
    // Cohen-Macaulay case through parameters first
    if resolution::cohen_macaulay_by_parameters(a, PARAMETER_SEED)? == Some(true) {
        let dim =
            hilbert::dimension(a)?.ok_or_else(|| Error::Construction("blowup algebra is the zero ring".into()))?;
        return Ok(AlgebraDepth {
            depth: dim,
            dim,
            cohen_macaulay: true,
        });
    }
    let depth = resolution::depth_of_quotient(a)?
        .ok_or_else(|| Error::Construction("blowup algebra is the zero ring".into()))?;
    let dim = hilbert::dimension(a)?.ok_or_else(|| Error::Construction("blowup algebra is the zero ring".into()))?;
    Ok(AlgebraDepth {
        depth,
        dim,
        cohen_macaulay: depth == dim,
    })
}

impl BlowupPresentation {
    pub fn rees_depth(&self) -> Result<AlgebraDepth> {
        algebra_depth(&self.rees_ideal)
    }

    pub fn agr_depth(&self) -> Result<AlgebraDepth> {
        let hs = self.agr_hilbert_series()?;
        if resolution::cohen_macaulay_by_parameters_with_series(&self.agr_ideal, &hs, PARAMETER_SEED)? == Some(true) {
            let dim = hs
                .dimension()
                .ok_or_else(|| Error::Construction("blowup algebra is the zero ring".into()))?;
            return Ok(AlgebraDepth {
                depth: dim,
                dim,
                cohen_macaulay: true,
            });
        }
        algebra_depth(&self.agr_ideal)
    }

    /// Hilbert series of `G(I)` in the ambient grading, read off the Rees
    /// algebra: `G = R/IR` and `IR` is `R_+` moved down by the degree of `t`.
    /// The basis of the associated graded ideal itself can be far larger.
    pub fn agr_hilbert_series(&self) -> Result<HilbertSeries> {
        let rees = hilbert::hilbert_series_of_quotient(&self.rees_ideal)?;
        let n = self.generators.len();
        let base = HilbertSeries {
            numerator: vec![1],
            weights: self.ambient.weights()[n..].to_vec(),
        };
        let f1 = self.generators[0]
            .degree()
            .ok_or_else(|| Error::Construction("zero generator".into()))?;
        // deg t = deg T_1 - deg f_1 <= 0
        let lift = f1 - self.ambient.weights()[0];
        let ideal_part = rees.difference(&base).shifted(lift);
        Ok(rees.difference(&ideal_part))
    }

    pub fn fiber_depth(&self) -> Result<AlgebraDepth> {
        algebra_depth(&self.fiber_ideal)
    }

    /// Hilbert series of `F(I)`, reduced to lowest terms.
    pub fn fiber_hilbert_series(&self) -> Result<HilbertSeries> {
        Ok(hilbert::hilbert_series_of_quotient(&self.fiber_ideal)?.simplified())
    }

    pub fn analytic_spread(&self) -> Result<usize> {
        Ok(hilbert::dimension(&self.fiber_ideal)?.unwrap_or(0))
    }

    /// Checks that `T_j -> f_j t` kills every generator of the Rees ideal.
    pub fn verify_kernel(&self) -> Result<bool> {
        let d = self.base_vars;
        let n = self.generators.len();
        let base = self.generators[0].ring();
        let mut names = base.names().to_vec();
        names.push(base.fresh_name("t"));
        let mut weights = base.weights().to_vec();
        weights.push(1);
        let rt = PolyRing::new(names, weights, MonomialOrder::WeightedGRevLex, *base.field())?;
        let tvar = Polynomial::var(&rt, d);
        let lift = shifted(d, 0);
        let mut images = Vec::with_capacity(n + d);
        for g in &self.generators {
            images.push(g.map_vars(&rt, &lift)?.checked_mul(&tvar)?);
        }
        images.extend((0..d).map(|k| Polynomial::var(&rt, k)));
        for g in self.rees_ideal.gens() {
            if !g.substitute(&rt, &images)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `dim F(I)`.
pub fn analytic_spread(i: &Ideal) -> Result<usize> {
    if i.is_zero() {
        return Ok(0);
    }
    rees_presentation(i)?.analytic_spread()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn principal_ideal_has_no_relations() {
        let r = PolyRing::standard(&["x", "y"], PrimeField::default()).unwrap();
        let p = rees_presentation(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(p.rees_ideal.gb().unwrap().is_empty());
        assert_eq!(p.analytic_spread().unwrap(), 1);
    }

    #[test]
    fn maximal_ideal_in_two_variables() {
        let r = PolyRing::standard(&["x", "y"], PrimeField::default()).unwrap();
        let p = rees_presentation(&Ideal::maximal(&r)).unwrap();
        let expect = Ideal::parse(&p.ambient, &["x*T2-y*T1"]).unwrap();
        assert!(p.rees_ideal.equals(&expect).unwrap());
        assert!(p.fiber_ideal.gb().unwrap().is_empty());
        assert_eq!(p.analytic_spread().unwrap(), 2);
        assert!(p.verify_kernel().unwrap());
        let g = p.agr_depth().unwrap();
        assert_eq!((g.depth, g.dim), (2, 2));
        let rd = p.rees_depth().unwrap();
        assert_eq!((rd.depth, rd.dim), (3, 3));
    }

    #[test]
    fn non_equigenerated_ideal() {
        let r = PolyRing::standard(&["x", "y"], PrimeField::default()).unwrap();
        let i = Ideal::parse(&r, &["x", "y^2"]).unwrap();
        let p = rees_presentation(&i).unwrap();
        assert!(p.verify_kernel().unwrap());
        assert_eq!(p.analytic_spread().unwrap(), 2);
    }

    #[test]
    fn saturation_matches_elimination() {
        let r = PolyRing::standard(&["x", "y", "z"], PrimeField::default()).unwrap();
        for srcs in [
            &["x^2", "x*y", "y^2", "z^2"][..],
            &["x*y", "y*z", "z*x"][..],
            &["x^2", "y^3", "x*y*z"][..],
            &["x^2-y*z", "y^2", "x*z^2"][..],
        ] {
            let i = Ideal::parse(&r, srcs).unwrap();
            let p = rees_presentation(&i).unwrap();
            assert!(p.verify_kernel().unwrap(), "{srcs:?}");
            let e = rees_ideal_by_elimination(&i, &p.ambient).unwrap();
            let (sat, hs) = rees_ideal_by_saturation(&p.generators, &p.ambient).unwrap();
            assert!(e.equals(&sat).unwrap(), "{srcs:?}");
            assert!(
                hs.same_series(&hilbert::hilbert_series_of_quotient(&e).unwrap()),
                "{srcs:?}"
            );
            assert!(e.equals(&p.rees_ideal).unwrap(), "{srcs:?}");
            let direct = hilbert::hilbert_series_of_quotient(&p.agr_ideal).unwrap();
            assert!(p.agr_hilbert_series().unwrap().same_series(&direct), "{srcs:?}");
        }
    }
}
