//! j-multiplicity through a one-dimensional reduction: for general
//! `x_1..x_d` in `I`, `Q = (x_1..x_{d-1}) : I^∞` and `j(I) = λ(R/(Q + x_d))`.

use super::presentation::analytic_spread;
use super::random_combinations;
use crate::error::{Error, Result};
use crate::hilbert::{self, LengthValue};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Draws tried before a genericity failure is reported.
pub const JMULT_TRIALS: usize = 8;
/// Identical draws required before a value is accepted.
pub const JMULT_AGREEMENT: usize = 2;

#[derive(Clone, Debug)]
pub struct Dim1Reduction {
    /// General elements `x_1..x_d` of `I`.
    pub elements: Vec<Polynomial>,
    pub coefficients: Vec<Vec<u32>>,
    pub seed: u64,
    /// `(x_1..x_{d-1}) : I^∞`.
    pub sat_ideal: Ideal,
}

/// Lengths over `R̄ = R/Q`; a bar denotes the image in `R̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JMultLengths {
    /// `λ(R̄/(x̄_d))`, the j-multiplicity.
    pub j: u64,
    /// `λ(Ī/Ī𝔪)`
    pub i_over_im: u64,
    /// `λ(R̄/Ī)`
    pub r_over_i: u64,
    /// `λ(Ī𝔪/x̄_dĪ)`
    pub im_over_xd_i: u64,
    /// `λ(Ī²/x̄_dĪ)`
    pub i2_over_xd_i: u64,
    /// `λ(Ī𝔪/x̄_d𝔪)`
    pub im_over_xd_m: u64,
}

impl JMultLengths {
    /// `λ(Ī/Ī𝔪) - 1 + λ(R̄/Ī) + λ(Ī𝔪/x̄_d𝔪)`: the additive formula that
    /// follows from `λ(R̄/x̄_d𝔪) = j + 1`.
    pub fn additive_rhs(&self) -> i64 {
        self.i_over_im as i64 - 1 + self.r_over_i as i64 + self.im_over_xd_m as i64
    }

    /// The same formula with `x̄_dĪ` in place of `x̄_d𝔪` in the last term.
    /// Exceeds `j` by `λ(R̄/Ī) - 1`.
    pub fn stated_rhs(&self) -> i64 {
        self.i_over_im as i64 - 1 + self.r_over_i as i64 + self.im_over_xd_i as i64
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct JMultReport {
    pub j_value: u64,
    pub analytic_spread: usize,
    /// `None` when `l(I) < d`, where `j = 0` without further computation.
    pub lengths: Option<JMultLengths>,
    pub minimal_j: bool,
    pub almost_minimal_j: bool,
    pub goto_minimal_j: bool,
    pub almost_goto_minimal_j: bool,
    pub seeds_used: Vec<u64>,
    pub agreement_count: usize,
    /// Every draw's tuple, in seed order.
    pub draws: Vec<JMultLengths>,
    pub additive_identity_holds: bool,
    pub stated_identity_holds: bool,
}

fn require_equigenerated(i: &Ideal) -> Result<()> {
    if i.is_zero() || i.generating_degree().is_none() {
        return Err(Error::NotEquigenerated(format!("{i:?}")));
    }
    Ok(())
}

/// One draw of general elements and the saturation `Q`. Retries while
/// `dim R/Q != 1`.
pub fn dim1_reduction(i: &Ideal, seed: u64) -> Result<Dim1Reduction> {
    require_equigenerated(i)?;
    let ring = i.ring();
    let d = ring.nvars();
    let gens = i.min_gens()?;
    for attempt in 0..JMULT_TRIALS {
        let s = seed.wrapping_add(attempt as u64 * 0x5851_F42D);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (elements, coefficients) = random_combinations(&gens, d, &mut rng);
        let front = Ideal::new(ring, elements[..d - 1].to_vec())?;
        let sat_ideal = front.saturate(i)?;
        if hilbert::dimension(&sat_ideal)? == Some(1) {
            return Ok(Dim1Reduction {
                elements,
                coefficients,
                seed: s,
                sat_ideal,
            });
        }
    }
    Err(Error::Precondition(format!(
        "no draw gave dim R/Q = 1 in {JMULT_TRIALS} attempts; l(I) < d is likely"
    )))
}

fn finite(v: LengthValue, what: &str) -> Result<u64> {
    v.finite()
        .ok_or_else(|| Error::Construction(format!("{what} has infinite length; the draw is not general")))
}

/// `λ((A + Q)/(B + Q))`.
fn rel_length(a: &Ideal, b: &Ideal, q: &Ideal, what: &str) -> Result<u64> {
    finite(hilbert::length_of_quotient(&a.sum(q)?, &b.sum(q)?)?, what)
}

/// All lengths of the additive formula for one draw.
pub fn lengths_for(i: &Ideal, red: &Dim1Reduction) -> Result<JMultLengths> {
    let ring = i.ring();
    let q = &red.sat_ideal;
    let m = Ideal::maximal(ring);
    let xd = red.elements.last().unwrap();
    let unit = Ideal::unit(ring);
    let im = i.product_compact(&m)?;
    let xd_i = i.mul_poly(xd)?;
    let xd_m = m.mul_poly(xd)?;
    let i2 = i.power_compact(2)?;
    let xd_ideal = Ideal::new(ring, vec![xd.clone()])?;
    Ok(JMultLengths {
        j: rel_length(&unit, &xd_ideal, q, "R/(Q + x_d)")?,
        i_over_im: rel_length(i, &im, q, "I/Im")?,
        r_over_i: rel_length(&unit, i, q, "R/I")?,
        im_over_xd_i: rel_length(&im, &xd_i, q, "Im/x_d I")?,
        i2_over_xd_i: rel_length(&i2, &xd_i, q, "I^2/x_d I")?,
        im_over_xd_m: rel_length(&im, &xd_m, q, "Im/x_d m")?,
    })
}

/// j-multiplicity with the component lengths and classification flags.
/// Draws are repeated until [`JMULT_AGREEMENT`] of them give identical lengths.
pub fn j_multiplicity(i: &Ideal, seed: u64) -> Result<JMultReport> {
    require_equigenerated(i)?;
    let d = i.ring().nvars();
    let l = analytic_spread(i)?;
    if l < d {
        return Ok(JMultReport {
            j_value: 0,
            analytic_spread: l,
            lengths: None,
            minimal_j: false,
            almost_minimal_j: false,
            goto_minimal_j: false,
            almost_goto_minimal_j: false,
            seeds_used: Vec::new(),
            agreement_count: 0,
            draws: Vec::new(),
            additive_identity_holds: true,
            stated_identity_holds: true,
        });
    }
    let mut draws: Vec<JMultLengths> = Vec::new();
    let mut seeds = Vec::new();
    for trial in 0..JMULT_TRIALS {
        let s = seed.wrapping_add(trial as u64 * 0x2545_F491);
        let red = dim1_reduction(i, s)?;
        seeds.push(red.seed);
        // a non-general draw can produce an infinite length; skip it
        let lens = match lengths_for(i, &red) {
            Ok(v) => v,
            Err(Error::Construction(_)) => continue,
            Err(e) => return Err(e),
        };
        draws.push(lens);
        let count = draws.iter().filter(|x| **x == lens).count();
        if count >= JMULT_AGREEMENT {
            return Ok(JMultReport {
                j_value: lens.j,
                analytic_spread: l,
                lengths: Some(lens),
                minimal_j: lens.i2_over_xd_i == 0,
                almost_minimal_j: lens.i2_over_xd_i == 1,
                goto_minimal_j: lens.im_over_xd_m == 0,
                almost_goto_minimal_j: lens.im_over_xd_m == 1,
                seeds_used: seeds,
                agreement_count: count,
                additive_identity_holds: draws.iter().all(|x| x.additive_rhs() == x.j as i64),
                stated_identity_holds: draws.iter().all(|x| x.stated_rhs() == x.j as i64),
                draws,
            });
        }
    }
    Err(Error::SeedDisagreement {
        trials: JMULT_TRIALS,
        details: format!("{draws:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    #[test]
    fn maximal_ideal() {
        let r = PolyRing::indexed("x", 2).unwrap();
        let rep = j_multiplicity(&Ideal::maximal(&r), 0).unwrap();
        assert_eq!(rep.j_value, 1);
        assert!(rep.goto_minimal_j);
        assert!(rep.additive_identity_holds);
    }

    #[test]
    fn principal_ideal_has_zero_j() {
        let r = PolyRing::indexed("x", 2).unwrap();
        let rep = j_multiplicity(&Ideal::parse(&r, &["x1"]).unwrap(), 0).unwrap();
        assert_eq!(rep.j_value, 0);
        assert_eq!(rep.analytic_spread, 1);
    }

    #[test]
    fn primary_ideal_matches_hilbert_samuel() {
        let r = PolyRing::indexed("x", 2).unwrap();
        let i = Ideal::parse(&r, &["x1^2", "x1*x2+x2^2"]).unwrap();
        let rep = j_multiplicity(&i, 7).unwrap();
        assert_eq!(rep.j_value, hilbert::hs_multiplicity(&i, 11).unwrap());
        assert_eq!(rep.j_value, 4);
    }
}
