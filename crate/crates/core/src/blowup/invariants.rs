//! Conditions and invariants attached to an ideal and a reduction: `G_s`,
//! Artin-Nagata certificates, residual intersections, the core, a-invariants,
//! colon conditions and the Ratliff-Rush filtration.

use super::presentation::{analytic_spread, rees_presentation, BlowupPresentation};
use super::reduction::{self, draw_reduction, REDUCTION_CAP};
use crate::error::{Error, Result};
use crate::hilbert::{self, HilbertSeries, LengthValue};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsReport {
    pub s: usize,
    pub holds: bool,
    /// `(i, ht Fitt_i(I))` for the indices examined, `1 <= i <= s - 1`.
    pub fitting_heights: Vec<(usize, usize)>,
}

/// `G_s`: `ht Fitt_i(I) >= i + 1` for `1 <= i <= s - 1`, equivalently
/// `mu(I_p) <= ht p` for primes `p ⊇ I` of height at most `s - 1`.
pub fn check_gs(i: &Ideal, s: usize) -> Result<GsReport> {
    let mut heights = Vec::new();
    let n = i.mu()?;
    for k in 1..s {
        let h = if k >= n {
            // Fitt_k is the unit ideal
            i.ring().nvars() + 1
        } else {
            hilbert::height(&i.fitting_ideal(k)?)?
        };
        heights.push((k, h));
        if h < k + 1 {
            return Ok(GsReport {
                s,
                holds: false,
                fitting_heights: heights,
            });
        }
    }
    Ok(GsReport {
        s,
        holds: true,
        fitting_heights: heights,
    })
}

/// Sufficient test for being generically a complete intersection: `R/I`
/// Cohen-Macaulay (so every minimal prime has height `g`) and
/// `ht Fitt_g(I) > g`.
pub fn generically_complete_intersection(i: &Ideal) -> Result<bool> {
    let g = hilbert::height(i)?;
    if g > i.ring().nvars() || !resolution::is_cohen_macaulay(i)? {
        return Ok(false);
    }
    if i.mu()? <= g {
        return Ok(true);
    }
    Ok(hilbert::height(&i.fitting_ideal(g)?)? > g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnMethod {
    Equimultiple,
    DeviationOneGenericallyCi,
    DepthConditions,
    SlidingDepth,
    StronglyCohenMacaulay,
    UserAsserted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnCertificate {
    /// `AN^-_{s-2}` with `s = l(I)`.
    pub s: usize,
    pub method: Option<AnMethod>,
    pub gs_holds: bool,
}

impl AnCertificate {
    pub fn certified(&self) -> bool {
        self.method.is_some()
    }
}

/// Tries the known sufficient conditions for `G_s` plus `AN^-_{s-2}`,
/// cheapest first. `user_asserted` is used only if nothing else certifies.
pub fn an_minus_certificate(i: &Ideal, user_asserted: bool) -> Result<AnCertificate> {
    let s = analytic_spread(i)?;
    let g = hilbert::height(i)?;
    let d = i.ring().nvars();
    let gs = check_gs(i, s)?.holds;
    let done = |m: AnMethod| AnCertificate {
        s,
        method: Some(m),
        gs_holds: gs,
    };
    if s == g {
        return Ok(done(AnMethod::Equimultiple));
    }
    if s == g + 1 && generically_complete_intersection(i)? {
        return Ok(done(AnMethod::DeviationOneGenericallyCi));
    }
    if gs {
        // polynomial rings are Gorenstein
        let mut ok = true;
        for j in 1..(s as i64 - g as i64) {
            let need = d as i64 - g as i64 - j + 1;
            let pow = i.power_compact(j as u32)?;
            let depth = resolution::depth_of_quotient(&pow)?.map_or(i64::MAX, |v| v as i64);
            if depth < need {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(done(AnMethod::DepthConditions));
        }
        if i.mu()? <= resolution::KOSZUL_MAX_GENS {
            if resolution::strongly_cm_check(i)? {
                return Ok(done(AnMethod::StronglyCohenMacaulay));
            }
            if resolution::sliding_depth_check(i)? {
                return Ok(done(AnMethod::SlidingDepth));
            }
        }
    }
    Ok(AnCertificate {
        s,
        method: user_asserted.then_some(AnMethod::UserAsserted),
        gs_holds: gs,
    })
}

#[derive(Clone, Debug)]
pub struct ResidualStep {
    pub i: usize,
    /// `(x_1..x_i) : I`.
    pub k: Ideal,
    pub height: usize,
    pub dim: Option<usize>,
    /// `ht K_i >= i`
    pub height_ok: bool,
    /// `ht(I + K_i) >= i + 1`
    pub sum_height_ok: bool,
}

pub fn residual_chain(i: &Ideal, xs: &[Polynomial]) -> Result<Vec<ResidualStep>> {
    for x in xs {
        if !i.contains_poly(x)? {
            return Err(Error::Containment(format!("{x} is not in {i:?}")));
        }
    }
    let ring = i.ring();
    let mut out = Vec::with_capacity(xs.len() + 1);
    for k in 0..=xs.len() {
        let front = Ideal::new(ring, xs[..k].to_vec())?;
        let kk = front.colon(i)?;
        let height = hilbert::height(&kk)?;
        let dim = hilbert::dimension(&kk)?;
        let sum_height = hilbert::height(&i.sum(&kk)?)?;
        out.push(ResidualStep {
            i: k,
            height_ok: height >= k,
            sum_height_ok: sum_height > k,
            k: kk,
            height,
            dim,
        });
    }
    Ok(out)
}

/// Heuristic estimate of the core (intersection of all minimal reductions).
#[derive(Clone, Debug)]
pub struct CoreProbe {
    pub core: Ideal,
    pub reductions_used: usize,
    pub stabilized: bool,
    pub equals_i: bool,
    pub equals_im: bool,
}

/// Rounds of doubling tried by [`core_probe`].
pub const CORE_ROUNDS: usize = 4;

/// Intersects `trials` general minimal reductions, doubling the count until
/// two consecutive rounds give the same ideal.
pub fn core_probe(i: &Ideal, trials: usize, seed: u64) -> Result<CoreProbe> {
    if i.generating_degree().is_none() {
        return Err(Error::NotEquigenerated(format!("{i:?}")));
    }
    let pres = rees_presentation(i)?;
    core_probe_with(i, &pres, trials, seed)
}

pub fn core_probe_with(i: &Ideal, pres: &BlowupPresentation, trials: usize, seed: u64) -> Result<CoreProbe> {
    let trials = trials.max(1);
    let mut used = 0usize;
    let mut acc: Option<Ideal> = None;
    let mut previous: Option<Ideal> = None;
    let mut stabilized = false;
    let mut target = trials;
    for _ in 0..CORE_ROUNDS {
        while used < target {
            let (j, _, _, _) = draw_reduction(pres, seed.wrapping_add(1000 * used as u64))?;
            used += 1;
            acc = Some(match acc {
                None => j,
                Some(a) => a.intersect(&j)?,
            });
        }
        let cur = acc.clone().unwrap();
        if let Some(p) = &previous {
            if p.equals(&cur)? {
                stabilized = true;
                break;
            }
        }
        previous = Some(cur);
        target *= 2;
    }
    let core = acc.unwrap();
    let im = i.product_compact(&Ideal::maximal(i.ring()))?;
    Ok(CoreProbe {
        equals_i: core.equals(i)?,
        equals_im: core.equals(&im)?,
        core,
        reductions_used: used,
        stabilized,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AInvariantF {
    /// `r - s`
    pub value: i64,
    /// Numerator degree of the reduced Hilbert series of `F(I)` minus `s`.
    pub from_hilbert_series: i64,
    pub consistent: bool,
}

/// `a(F(I)) = r - s` for Cohen-Macaulay fiber cones.
pub fn a_invariant_f(fiber_hs: &HilbertSeries, r: u32, s: usize, f_is_cm: bool) -> Result<AInvariantF> {
    if !f_is_cm {
        return Err(Error::Precondition(
            "a(F) = r - s needs a Cohen-Macaulay fiber cone".into(),
        ));
    }
    let hs = fiber_hs.simplified();
    let value = r as i64 - s as i64;
    let from_hs = hs.numerator_degree().unwrap_or(0) as i64 - hs.weights.len() as i64;
    Ok(AInvariantF {
        value,
        from_hilbert_series: from_hs,
        consistent: value == from_hs,
    })
}

/// `a(G(I)) = max{-g, r - s}` when `G(I)` is Cohen-Macaulay and `G_s` holds.
pub fn a_invariant_g(g: usize, r: u32, s: usize, g_is_cm: bool, gs_holds: bool) -> Result<i64> {
    if !g_is_cm || !gs_holds {
        return Err(Error::Precondition(
            "a(G) = max{-g, r - s} needs G(I) Cohen-Macaulay and G_s".into(),
        ));
    }
    Ok((-(g as i64)).max(r as i64 - s as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filtration {
    /// `I_n = I^n`
    Adic,
    /// `I_n = I^n m`
    MAdic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonCheck {
    pub holds: bool,
    pub first_failure: Option<u32>,
    pub checked_up_to: u32,
}

fn filtration_level(i: &Ideal, f: Filtration, n: u32) -> Result<Ideal> {
    let p = i.power_compact(n)?;
    match f {
        Filtration::Adic => Ok(p),
        Filtration::MAdic => p.product_compact(&Ideal::maximal(i.ring())),
    }
}

fn numerator(a: &Ideal) -> Result<Vec<i64>> {
    Ok(hilbert::hilbert_series_of_quotient(a)?.numerator)
}

fn tp_combine(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (k, v) in a.iter().enumerate() {
        out[k] += v;
    }
    for (k, v) in b.iter().enumerate() {
        out[k] += sign * v;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// `(x_1..x_h) ∩ I_n = (x_1..x_h) I_{n-1}` for `1 <= n <= cutoff`.
///
/// The right side is always contained in the left, so equality is tested by
/// comparing `HS(R/X I_{n-1})` with `HS(R/X) + HS(R/I_n) - HS(R/(X + I_n))`,
/// the Hilbert series of `R/(X ∩ I_n)`.
pub fn valabrega_valla_check(
    i: &Ideal,
    xs: &[Polynomial],
    h: usize,
    filtration: Filtration,
    cutoff: u32,
) -> Result<ColonCheck> {
    valabrega_valla_range(i, xs, h, filtration, 1, cutoff)
}

/// [`valabrega_valla_check`] restricted to `from <= n <= to`. An empty range holds.
pub fn valabrega_valla_range(
    i: &Ideal,
    xs: &[Polynomial],
    h: usize,
    filtration: Filtration,
    from: u32,
    to: u32,
) -> Result<ColonCheck> {
    if h > xs.len() {
        return Err(Error::Precondition(format!("h = {h} exceeds {} elements", xs.len())));
    }
    let ring = i.ring();
    let x = Ideal::new(ring, xs[..h].to_vec())?;
    let hx = numerator(&x)?;
    for n in from.max(1)..=to {
        let level = filtration_level(i, filtration, n)?;
        let below = match (filtration, n) {
            (Filtration::Adic, 1) => Ideal::unit(ring),
            (Filtration::MAdic, 1) => Ideal::maximal(ring),
            _ => filtration_level(i, filtration, n - 1)?,
        };
        let lhs = numerator(&x.product_compact(&below)?)?;
        let inter = tp_combine(
            &tp_combine(&hx, &numerator(&level)?, 1),
            &numerator(&x.sum(&level)?)?,
            -1,
        );
        if lhs != inter {
            return Ok(ColonCheck {
                holds: false,
                first_failure: Some(n),
                checked_up_to: n,
            });
        }
    }
    Ok(ColonCheck {
        holds: true,
        first_failure: None,
        checked_up_to: to,
    })
}

#[derive(Clone, Debug)]
pub struct RatliffRush {
    pub ideal: Ideal,
    pub stabilized: bool,
    /// Number of colon steps `t` computed.
    pub steps: u32,
}

pub const RATLIFF_RUSH_CUTOFF: u32 = 10;

/// `union_t (I^{j+t} m : I^t)`, computed as an ascending chain until two
/// consecutive terms agree.
pub fn ratliff_rush(i: &Ideal, j: u32, cutoff: u32) -> Result<RatliffRush> {
    let ring = i.ring();
    let m = Ideal::maximal(ring);
    let base = i.compact();
    let mut previous: Option<Ideal> = None;
    for t in 1..=cutoff {
        let top = base.power_compact(j + t)?.product_compact(&m)?;
        let mut cur = top;
        for _ in 0..t {
            cur = cur.colon(&base)?;
        }
        if let Some(p) = &previous {
            if p.equals(&cur)? {
                return Ok(RatliffRush {
                    ideal: cur,
                    stabilized: true,
                    steps: t,
                });
            }
        }
        previous = Some(cur);
    }
    Ok(RatliffRush {
        ideal: previous.unwrap_or_else(|| Ideal::unit(ring)),
        stabilized: false,
        steps: cutoff,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub goto_minimal: bool,
    /// `λ(I m / J m)`
    pub length_im_over_jm: LengthValue,
    pub almost_goto_minimal: bool,
    /// `I^2 m = J I m`
    pub i2m_equals_jim: bool,
    pub r_j: u32,
    pub j_is_minimal: bool,
    pub gd_holds: bool,
    pub an_certificate: Option<AnMethod>,
}

/// `I m = J m`.
pub fn is_goto_minimal_with(i: &Ideal, j: &Ideal) -> Result<bool> {
    let m = Ideal::maximal(i.ring());
    j.product_compact(&m)?.contains(&i.product_compact(&m)?)
}

/// Compares `I m` with `J m` for a reduction `J` of `I`.
pub fn classify_with_reduction(i: &Ideal, j: &Ideal, cert: &AnCertificate) -> Result<Classification> {
    let ring = i.ring();
    let r_j = reduction::reduction_number(i, j, REDUCTION_CAP)?;
    let m = Ideal::maximal(ring);
    let im = i.product_compact(&m)?;
    let jm = j.product_compact(&m)?;
    let len = hilbert::length_of_quotient(&im, &jm)?;
    let i2m = i.power_compact(2)?.product_compact(&m)?;
    let jim = j.product_compact(&im)?;
    let d = ring.nvars();
    let l = cert.s;
    Ok(Classification {
        goto_minimal: len == LengthValue::Finite(0),
        almost_goto_minimal: len == LengthValue::Finite(1),
        length_im_over_jm: len,
        i2m_equals_jim: jim.contains(&i2m)?,
        r_j,
        j_is_minimal: j.mu()? == l,
        gd_holds: if l == d { cert.gs_holds } else { check_gs(i, d)?.holds },
        an_certificate: cert.method,
    })
}
