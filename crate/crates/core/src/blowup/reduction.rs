//! Minimal reductions and the reduction numbers `r_J(I)` and `tau_J(I)`.

use super::presentation::{rees_presentation, BlowupPresentation};
use super::random_combinations;
use crate::error::{Error, Result};
use crate::hilbert;
use crate::ideal::{linear_basis, Ideal};
use crate::poly::Polynomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const REDUCTION_CAP: u32 = 30;
pub const REDUCTION_ATTEMPTS: usize = 8;

#[derive(Clone, Debug)]
pub struct ReductionData {
    pub j: Ideal,
    /// Row `i` holds the coefficients of the `i`-th generator of `J` in the
    /// minimal generators of `I`.
    pub coefficients: Vec<Vec<u32>>,
    pub seed: u64,
    pub attempts: usize,
    pub r_j: Option<u32>,
    /// `r_J` read off the Artinian fiber quotient `F(I)/(J)F(I)`.
    pub r_j_from_fiber: Option<u32>,
    pub tau_j: Option<u32>,
    pub is_minimal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSummary {
    pub generators: Vec<String>,
    pub coefficients: Vec<Vec<u32>>,
    pub seed: u64,
    pub attempts: usize,
    pub r_j: Option<u32>,
    pub r_j_from_fiber: Option<u32>,
    pub tau_j: Option<u32>,
    pub is_minimal: bool,
}

impl ReductionData {
    pub fn summary(&self) -> ReductionSummary {
        ReductionSummary {
            generators: self.j.gens().iter().map(|g| g.to_string()).collect(),
            coefficients: self.coefficients.clone(),
            seed: self.seed,
            attempts: self.attempts,
            r_j: self.r_j,
            r_j_from_fiber: self.r_j_from_fiber,
            tau_j: self.tau_j,
            is_minimal: self.is_minimal,
        }
    }
}

/// If the forms `sum_j c_ij T_j` are a system of parameters of `F(I)`,
/// returns the top degree of `F(I) / (forms)`, which equals `r_J(I)` for an
/// equigenerated `I`.
pub fn fiber_reduction_number(pres: &BlowupPresentation, coefficients: &[Vec<u32>]) -> Result<Option<u32>> {
    let fr = &pres.fiber_ring;
    let mut extra = Vec::with_capacity(coefficients.len());
    for row in coefficients {
        let mut form = Polynomial::zero(fr);
        for (k, &c) in row.iter().enumerate() {
            if c != 0 {
                form = form.checked_add(&Polynomial::var(fr, k).scale(c))?;
            }
        }
        extra.push(form);
    }
    let q = pres.fiber_ideal.add_gens(&extra)?;
    let hs = hilbert::hilbert_series_of_quotient(&q)?.simplified();
    if hs.dimension() != Some(0) {
        return Ok(None);
    }
    Ok(Some(hs.numerator_degree().unwrap_or(0) as u32))
}

/// Draws `l(I)` general combinations of the minimal generators until they
/// form a reduction (checked on the fiber cone). Does not compute `r_J`.
pub fn draw_reduction(pres: &BlowupPresentation, seed: u64) -> Result<(Ideal, Vec<Vec<u32>>, usize, Option<u32>)> {
    let l = pres.analytic_spread()?;
    let ring = pres.generators[0].ring().clone();
    for attempt in 0..REDUCTION_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64 * 0x9E37_79B9));
        let (polys, coeffs) = random_combinations(&pres.generators, l, &mut rng);
        if let Some(r) = fiber_reduction_number(pres, &coeffs)? {
            return Ok((Ideal::new(&ring, polys)?, coeffs, attempt + 1, Some(r)));
        }
    }
    Err(Error::NotAReduction(format!(
        "no reduction among {REDUCTION_ATTEMPTS} draws of {l} general elements"
    )))
}

/// A general minimal reduction of an equigenerated ideal with its reduction numbers.
pub fn random_minimal_reduction(i: &Ideal, seed: u64) -> Result<ReductionData> {
    let pres = rees_presentation(i)?;
    random_minimal_reduction_with(i, &pres, seed)
}

pub fn random_minimal_reduction_with(i: &Ideal, pres: &BlowupPresentation, seed: u64) -> Result<ReductionData> {
    if i.generating_degree().is_none() {
        return Err(Error::NotEquigenerated(format!("{i:?}")));
    }
    let l = pres.analytic_spread()?;
    let (j, coefficients, attempts, r_fiber) = draw_reduction(pres, seed)?;
    let r_j = reduction_number(i, &j, REDUCTION_CAP)?;
    let tau_j = tau(i, &j, REDUCTION_CAP)?;
    let is_minimal = j.mu()? == l;
    Ok(ReductionData {
        j,
        coefficients,
        seed,
        attempts,
        r_j: Some(r_j),
        r_j_from_fiber: r_fiber,
        tau_j: Some(tau_j),
        is_minimal,
    })
}

/// Degree-by-degree spans of `I^n` for an ideal generated in one degree.
struct PowerSpans {
    gens: Vec<Polynomial>,
    spans: Vec<Vec<Polynomial>>,
}

impl PowerSpans {
    fn new(i: &Ideal) -> Result<Self> {
        let gens = i.min_gens()?;
        let one = Polynomial::one(i.ring());
        Ok(PowerSpans {
            gens,
            spans: vec![vec![one]],
        })
    }

    fn get(&mut self, n: usize) -> Result<&[Polynomial]> {
        while self.spans.len() <= n {
            let last = self.spans.last().unwrap();
            let prods = products(&self.gens, last)?;
            let ring = self.gens[0].ring().clone();
            self.spans.push(linear_basis(&ring, prods.iter()));
        }
        Ok(&self.spans[n])
    }
}

fn products(a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.checked_mul(y)?);
        }
    }
    Ok(out)
}

fn span_rank(ring: &crate::ring::PolyRing, polys: &[Polynomial]) -> usize {
    linear_basis(ring, polys.iter()).len()
}

fn require_reduction_shape(i: &Ideal, j: &Ideal) -> Result<()> {
    if !i.contains(j)? {
        return Err(Error::Containment(format!("{j:?} is not contained in {i:?}")));
    }
    Ok(())
}

/// Degree shared by all generators of both ideals, if any.
fn common_degree(i: &Ideal, j: &Ideal) -> Option<u32> {
    let e = i.generating_degree()?;
    (j.generating_degree()? == e).then_some(e)
}

/// Least `n` with `I^{n+1} = J I^n`.
pub fn reduction_number(i: &Ideal, j: &Ideal, cap: u32) -> Result<u32> {
    require_reduction_shape(i, j)?;
    let ring = i.ring().clone();
    if common_degree(i, j).is_some() {
        let jg = j.compact().gens().to_vec();
        let mut spans = PowerSpans::new(i)?;
        for n in 0..=cap as usize {
            let next = spans.get(n + 1)?.len();
            let base = spans.get(n)?.to_vec();
            if span_rank(&ring, &products(&jg, &base)?) == next {
                return Ok(n as u32);
            }
        }
    } else {
        let mut pow = Ideal::unit(&ring);
        for n in 0..=cap {
            let next = pow.product_compact(i)?;
            let jn = pow.product_compact(j)?;
            if jn.contains(&next)? {
                return Ok(n);
            }
            pow = next;
        }
    }
    Err(Error::NotAReduction(format!(
        "no reduction number up to {cap}; J is likely not a reduction"
    )))
}

/// Least `n >= 0` with `I^n m = J I^{n-1} m`, where `I^{-1} m` is the whole ring.
pub fn tau(i: &Ideal, j: &Ideal, cap: u32) -> Result<u32> {
    require_reduction_shape(i, j)?;
    let ring = i.ring().clone();
    let m = Ideal::maximal(&ring);
    if j.equals(&m)? {
        return Ok(0);
    }
    let vars = Polynomial::vars(&ring);
    if common_degree(i, j).is_some() {
        let jg = j.compact().gens().to_vec();
        let mut spans = PowerSpans::new(i)?;
        for n in 1..=cap as usize {
            let im = products(&vars, spans.get(n)?)?;
            let lower = products(&vars, spans.get(n - 1)?)?;
            let lower = linear_basis(&ring, lower.iter());
            if span_rank(&ring, &im) == span_rank(&ring, &products(&jg, &lower)?) {
                return Ok(n as u32);
            }
        }
    } else {
        let mut lower = m.clone();
        for n in 1..=cap {
            let upper = lower.product_compact(i)?;
            if lower.product_compact(j)?.contains(&upper)? {
                return Ok(n);
            }
            lower = upper;
        }
    }
    Err(Error::NotAReduction(format!(
        "tau not reached up to {cap}; J is likely not a reduction"
    )))
}
