//! Theorem verifiers. Each returns a [`TheoremReport`]; none of them asserts.

use super::{Analysis, HypothesisStatus, ReportBuilder, TheoremReport};
use crate::blowup::invariants::{is_goto_minimal_with, valabrega_valla_range, Filtration};
use crate::error::{Error, Result};
use crate::hilbert::{length_of_quotient, HilbertSeries, LengthValue};
use crate::ideal::Ideal;
use serde::Serialize;

use HypothesisStatus::{UserAsserted, Verified};

fn status(ok: bool) -> HypothesisStatus {
    HypothesisStatus::from_bool(ok)
}

/// `a(F(I))` from the reduced Hilbert series: numerator degree minus dimension.
fn fiber_a_invariant(a: &Analysis) -> Result<i64> {
    let hs = a.presentation()?.fiber_hilbert_series()?;
    Ok(hs.numerator_degree().unwrap_or(0) as i64 - hs.weights.len() as i64)
}

/// Fiber cone Cohen-Macaulay iff `depth G(I) >= s - 1` iff `depth R(I) >= s`,
/// under `G_s`, `AN^-_{s-2}` and the colon conditions `J ∩ I^n m = J I^{n-1} m`
/// for `2 <= n <= r`.
pub fn verify_fcm(a: &Analysis) -> Result<TheoremReport> {
    let mut b = ReportBuilder::new("fiber-cone-cm-equivalence");
    let s = a.spread()?;
    let gs = a.gs()?;
    b.hypothesis("G_s", status(gs.holds), format!("s = {s}"));
    let (st, detail) = a.an_status()?;
    b.hypothesis("AN^-_{s-2}", st, detail);
    let (red, general) = a.minimal_number_reduction()?;
    let r = red.r_j.unwrap_or(0);
    b.hypothesis(
        "r_J(I) = r(I)",
        if general { Verified } else { UserAsserted },
        if general {
            "general minimal reduction"
        } else {
            "supplied reduction"
        },
    );
    let xs = red.j.gens();
    let colon = valabrega_valla_range(&a.ideal, xs, xs.len(), Filtration::MAdic, 2, r)?;
    b.hypothesis(
        "J ∩ I^n m = J I^(n-1) m for 2 <= n <= r",
        status(colon.holds),
        colon
            .first_failure
            .map(|n| format!("fails at n = {n}"))
            .unwrap_or_default(),
    );

    let f = a.fiber_depth()?;
    let g = a.agr_depth()?;
    let rd = a.rees_depth()?;
    let f_cm = f.cohen_macaulay;
    let g_deep = g.depth + 1 >= s;
    let r_deep = rd.depth >= s;
    b.conclusion("F(I) Cohen-Macaulay <=> depth G(I) >= s - 1", f_cm == g_deep);
    b.conclusion("depth G(I) >= s - 1 <=> depth R(I) >= s", g_deep == r_deep);
    b.value("s", s);
    b.value("r", r);
    b.value("depth_F", f.depth);
    b.value("dim_F", f.dim);
    b.value("depth_G", g.depth);
    b.value("dim_G", g.dim);
    b.value("depth_R", rd.depth);
    b.value("dim_R", rd.dim);
    b.value("F_cm", f_cm);
    Ok(b.finish())
}

/// The chain `R(I) CM <=> G(I) CM => F(I) CM with a(F) <= 1-g => r <= s-g+1`
/// when `I m = J m`, closed into an equivalence by depth conditions on the
/// powers `R/I^j`.
pub fn verify_theo1(a: &Analysis) -> Result<TheoremReport> {
    let mut b = ReportBuilder::new("goto-minimal-cm-chain");
    let d = a.dim() as i64;
    let s = a.spread()? as i64;
    let g = a.height()? as i64;
    let gs = a.gs()?;
    b.hypothesis("G_s", status(gs.holds), format!("s = {s}"));
    let (st, detail) = a.an_status()?;
    b.hypothesis("AN^-_{s-2}", st, detail);
    let (red, general) = a.minimal_number_reduction()?;
    let goto = is_goto_minimal_with(&a.ideal, &red.j)?;
    b.hypothesis("I m = J m", status(goto), "");
    let r = red.r_j.unwrap_or(0) as i64;

    let rees = a.rees_depth()?;
    let agr = a.agr_depth()?;
    let fib = a.fiber_depth()?;
    let a_f = if fib.cohen_macaulay {
        Some(fiber_a_invariant(a)?)
    } else {
        None
    };
    let st_i = rees.cohen_macaulay;
    let st_ii = agr.cohen_macaulay;
    let st_iii = fib.cohen_macaulay && a_f.is_some_and(|v| v <= 1 - g);
    let st_iv = r <= s - g + 1;
    if g >= 2 {
        b.conclusion("R(I) Cohen-Macaulay <=> G(I) Cohen-Macaulay", st_i == st_ii);
    }
    b.conclusion(
        "G(I) Cohen-Macaulay => F(I) Cohen-Macaulay with a(F) <= 1 - g",
        !st_ii || st_iii,
    );
    b.conclusion(
        "F(I) Cohen-Macaulay with a(F) <= 1 - g => r <= s - g + 1",
        !st_iii || st_iv,
    );
    if general {
        if let Some(v) = a_f {
            b.conclusion("F(I) Cohen-Macaulay => a(F) = r - s", v == r - s);
        }
    }
    let (depths_ok, depths) = a.power_depths_at_least(1..=s - g + 1, |j| d - g - j + 1)?;
    let all_equal = st_ii == st_iii && st_iii == st_iv && (g < 2 || st_i == st_ii);
    b.conclusion(
        "depth R/I^j >= d - g - j + 1 for j <= s - g + 1 => all statements equivalent",
        !depths_ok || all_equal,
    );
    b.value("d", d);
    b.value("s", s);
    b.value("g", g);
    b.value("r", r);
    b.value("R_cm", st_i);
    b.value("G_cm", st_ii);
    b.value("F_cm", fib.cohen_macaulay);
    if let Some(v) = a_f {
        b.value("a_F", v);
    }
    b.value("r_bound", r <= s - g + 1);
    b.value("power_depths", depths);
    b.value("power_depths_ok", depths_ok);
    Ok(b.finish())
}

/// `1 + (mu - d) t + t^2 + ... + t^r`.
pub fn closed_form_fiber_numerator(mu: usize, d: usize, r: u32) -> Vec<i64> {
    if r == 0 {
        return vec![1];
    }
    let mut out = vec![1, mu as i64 - d as i64];
    out.extend(std::iter::repeat(1).take(r as usize - 1));
    out
}

/// For ideals of almost minimal j-multiplicity: `F(I)` CM iff its Hilbert
/// series has the closed form iff `I^2 m = J I m`.
pub fn verify_hilbert_series_prop(a: &Analysis) -> Result<TheoremReport> {
    let mut b = ReportBuilder::new("almost-minimal-fiber-series");
    let d = a.dim();
    let s = a.spread()?;
    let g = a.height()?;
    b.hypothesis("l(I) = d", status(s == d), format!("l = {s}, d = {d}"));
    b.hypothesis("G_d", status(a.gd()?.holds), "");
    let (st, detail) = a.an_status()?;
    b.hypothesis("AN^-_{d-2}", st, detail);
    let depth = a.power_depth(1)?.map_or(i64::MAX, |v| v as i64);
    let need = (d as i64 - g as i64).min(1);
    b.hypothesis(
        "depth R/I >= min(d - g, 1)",
        status(depth >= need),
        format!("depth = {depth}"),
    );
    let jm = a.jmult()?;
    b.hypothesis(
        "almost minimal j-multiplicity",
        status(jm.almost_minimal_j),
        jm.lengths
            .map(|l| format!("λ(I^2/x_d I) = {}", l.i2_over_xd_i))
            .unwrap_or_default(),
    );
    // The equivalences run through λ(I^2/J I) = 1 for general J. The flag above
    // implies it once depth R/I > 0; for m-primary I it has to be checked.
    let general = &a.general_reduction()?.j;
    let i2 = a.ideal.power(2)?;
    let excess = length_of_quotient(&i2, &general.product_compact(&a.ideal)?)?;
    b.hypothesis(
        "λ(I^2/J I) = 1 for a general minimal reduction J",
        status(excess == LengthValue::Finite(1)),
        format!("λ = {excess}"),
    );

    let (red, _) = a.minimal_number_reduction()?;
    let r = red.r_j.unwrap_or(0);
    let mu = a.ideal.mu()?;
    let hs = a.presentation()?.fiber_hilbert_series()?;
    let closed = HilbertSeries {
        numerator: closed_form_fiber_numerator(mu, d, r),
        weights: vec![1; d],
    };
    let st_i = a.fiber_depth()?.cohen_macaulay;
    let st_ii = hs.same_series(&closed);
    let j = &a.reduction()?.j;
    let m = Ideal::maximal(a.ideal.ring());
    let im = a.ideal.product_compact(&m)?;
    let lhs = a.ideal.product_compact(&im)?;
    let st_iii = j.product_compact(&im)?.contains(&lhs)?;
    b.conclusion("F(I) Cohen-Macaulay <=> HS of F(I) has the closed form", st_i == st_ii);
    b.conclusion("HS of F(I) has the closed form <=> I^2 m = J I m", st_ii == st_iii);
    b.value("mu", mu);
    b.value("r", r);
    b.value("fiber_series", hs.to_string());
    b.value("closed_form", closed.to_string());
    b.value("F_cm", st_i);
    b.value("series_matches", st_ii);
    b.value("i2m_equals_jim", st_iii);
    Ok(b.finish())
}

/// `depth F(I) >= d - 1` for ideals of almost Goto-minimal j-multiplicity
/// with `depth G(I) >= d - 2`.
pub fn verify_almost_goto(a: &Analysis) -> Result<TheoremReport> {
    if a.ideal.generating_degree().is_none() {
        return Err(Error::NotEquigenerated(
            "the almost Goto-minimal test uses general elements".into(),
        ));
    }
    let mut b = ReportBuilder::new("almost-goto-fiber-depth");
    let d = a.dim() as i64;
    let s = a.spread()? as i64;
    let g = a.height()? as i64;
    b.hypothesis("l(I) = d", status(s == d), format!("l = {s}, d = {d}"));
    b.hypothesis("G_d", status(a.gd()?.holds), "");
    let (st, detail) = a.an_status()?;
    b.hypothesis("AN^-_{d-2}", st, detail);
    let (ok, depths) = a.power_depths_at_least(1..=2, |j| (d - g - j + 1).min(1))?;
    b.hypothesis(
        "depth R/I^j >= min(d - g - j + 1, 1) for j = 1, 2",
        status(ok),
        format!("depths {depths:?}"),
    );
    let jm = a.jmult()?;
    b.hypothesis(
        "almost Goto-minimal j-multiplicity",
        status(jm.almost_goto_minimal_j),
        jm.lengths
            .map(|l| format!("λ(I m/x_d m) = {}", l.im_over_xd_m))
            .unwrap_or_default(),
    );
    let agr = a.agr_depth()?;
    b.hypothesis(
        "depth G(I) >= d - 2",
        status(agr.depth as i64 >= d - 2),
        format!("depth = {}", agr.depth),
    );
    let fib = a.fiber_depth()?;
    b.conclusion("depth F(I) >= d - 1", fib.depth as i64 >= d - 1);
    b.value("depth_F", fib.depth);
    b.value("depth_G", agr.depth);
    Ok(b.finish())
}

/// Pairs of fiber-cone and associated-graded depths. Without `depth Z(I)`
/// nothing is asserted; gaps of two or more are flagged for inspection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthPair {
    pub depth_f: usize,
    pub depth_g: usize,
    pub gap: usize,
    pub flagged: bool,
}

pub fn check_depth_inequalities(depth_f: usize, depth_g: usize) -> DepthPair {
    let gap = depth_f.abs_diff(depth_g);
    DepthPair {
        depth_f,
        depth_g,
        gap,
        flagged: gap >= 2,
    }
}
