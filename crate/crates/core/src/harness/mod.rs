//! Executable checks of the structural theorems on concrete ideals, and
//! constructors for ideals with prescribed reduction behaviour.
//!
//! A verifier evaluates every hypothesis and every statement it can compute,
//! then records the theorem's implications as conclusions. A conclusion that
//! computes false while all hypotheses hold is a [`Verdict::Violation`].

pub mod construct;
pub mod examples;
pub mod verify;

pub use construct::{
    almost_goto_extension, construct_intermediate, family, family_sample, specialize_general_linear_form,
    ConstructionMode, FamilyConfig, FamilyReport, FamilySample,
};
pub use examples::{builtin_examples, ex61, ex62, ex63, example_by_name, BuiltinExample};
pub use verify::{
    check_depth_inequalities, closed_form_fiber_numerator, verify_almost_goto, verify_fcm, verify_hilbert_series_prop,
    verify_theo1, DepthPair,
};

use crate::blowup::invariants::{an_minus_certificate, check_gs, AnCertificate, AnMethod, GsReport};
use crate::blowup::jmult::{j_multiplicity, JMultReport};
use crate::blowup::presentation::{rees_presentation, AlgebraDepth, BlowupPresentation};
use crate::blowup::reduction::{self, random_minimal_reduction_with, ReductionData, REDUCTION_CAP};
use crate::error::{Error, Result};
use crate::hilbert;
use crate::ideal::Ideal;
use crate::resolution;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    Verified,
    CertifiedBySufficientCondition,
    UserAsserted,
    Failed,
}

impl HypothesisStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        }
    }

    pub fn satisfied(self) -> bool {
        self != HypothesisStatus::Failed
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conclusion {
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "hypotheses-not-met")]
    HypothesesNotMet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Violation => "VIOLATION",
            Verdict::HypothesesNotMet => "hypotheses-not-met",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ReportValue {
    Bool(bool),
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl From<bool> for ReportValue {
    fn from(v: bool) -> Self {
        ReportValue::Bool(v)
    }
}

impl From<i64> for ReportValue {
    fn from(v: i64) -> Self {
        ReportValue::Int(v)
    }
}

impl From<usize> for ReportValue {
    fn from(v: usize) -> Self {
        ReportValue::Int(v as i64)
    }
}

impl From<u32> for ReportValue {
    fn from(v: u32) -> Self {
        ReportValue::Int(v as i64)
    }
}

impl From<Vec<i64>> for ReportValue {
    fn from(v: Vec<i64>) -> Self {
        ReportValue::Ints(v)
    }
}

impl From<String> for ReportValue {
    fn from(v: String) -> Self {
        ReportValue::Text(v)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusions: Vec<Conclusion>,
    pub verdict: Verdict,
    pub values: BTreeMap<String, ReportValue>,
}

/// Accumulates a report; the verdict is fixed by [`ReportBuilder::finish`].
pub(crate) struct ReportBuilder {
    theorem: String,
    hypotheses: Vec<Hypothesis>,
    conclusions: Vec<Conclusion>,
    values: BTreeMap<String, ReportValue>,
}

impl ReportBuilder {
    pub(crate) fn new(theorem: &str) -> Self {
        ReportBuilder {
            theorem: theorem.into(),
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub(crate) fn hypothesis(&mut self, name: &str, status: HypothesisStatus, detail: impl Into<String>) {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    pub(crate) fn conclusion(&mut self, statement: &str, holds: bool) {
        self.conclusions.push(Conclusion {
            statement: statement.into(),
            holds,
        });
    }

    pub(crate) fn value(&mut self, key: &str, v: impl Into<ReportValue>) {
        self.values.insert(key.into(), v.into());
    }

    pub(crate) fn finish(self) -> TheoremReport {
        let verdict = if !self.hypotheses.iter().all(|h| h.status.satisfied()) {
            Verdict::HypothesesNotMet
        } else if self.conclusions.iter().all(|c| c.holds) {
            Verdict::Consistent
        } else {
            Verdict::Violation
        };
        TheoremReport {
            theorem: self.theorem,
            hypotheses: self.hypotheses,
            conclusions: self.conclusions,
            verdict,
            values: self.values,
        }
    }
}

/// Lazily computed invariants of one ideal, shared between verifiers.
pub struct Analysis {
    pub ideal: Ideal,
    pub seed: u64,
    /// Accept `AN^-` on the caller's word when no sufficient condition applies.
    pub an_asserted: bool,
    /// Reduction supplied with the input instead of a random one.
    pub explicit_reduction: Option<Ideal>,
    pres: OnceLock<BlowupPresentation>,
    height: OnceLock<usize>,
    gs: OnceLock<GsReport>,
    gd: OnceLock<GsReport>,
    an: OnceLock<AnCertificate>,
    general: OnceLock<ReductionData>,
    explicit: OnceLock<ReductionData>,
    rees: OnceLock<AlgebraDepth>,
    agr: OnceLock<AlgebraDepth>,
    fiber: OnceLock<AlgebraDepth>,
    jmult: OnceLock<JMultReport>,
    power_depths: Mutex<BTreeMap<u32, Option<usize>>>,
}

fn cached<'a, T>(cell: &'a OnceLock<T>, f: impl FnOnce() -> Result<T>) -> Result<&'a T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl Analysis {
    pub fn new(ideal: Ideal) -> Self {
        Analysis {
            ideal,
            seed: 0,
            an_asserted: false,
            explicit_reduction: None,
            pres: OnceLock::new(),
            height: OnceLock::new(),
            gs: OnceLock::new(),
            gd: OnceLock::new(),
            an: OnceLock::new(),
            general: OnceLock::new(),
            explicit: OnceLock::new(),
            rees: OnceLock::new(),
            agr: OnceLock::new(),
            fiber: OnceLock::new(),
            jmult: OnceLock::new(),
            power_depths: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn from_example(e: &BuiltinExample) -> Self {
        let mut a = Analysis::new(e.ideal.clone());
        a.explicit_reduction = e.reduction.clone();
        a.an_asserted = e.an_known;
        a
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_reduction(mut self, j: Option<Ideal>) -> Self {
        self.explicit_reduction = j;
        self
    }

    pub fn with_an_asserted(mut self, v: bool) -> Self {
        self.an_asserted = v;
        self
    }

    pub fn dim(&self) -> usize {
        self.ideal.ring().nvars()
    }

    pub fn presentation(&self) -> Result<&BlowupPresentation> {
        cached(&self.pres, || rees_presentation(&self.ideal))
    }

    pub fn spread(&self) -> Result<usize> {
        self.presentation()?.analytic_spread()
    }

    /// Height, which is the grade in a polynomial ring.
    pub fn height(&self) -> Result<usize> {
        cached(&self.height, || hilbert::height(&self.ideal)).copied()
    }

    pub fn gs(&self) -> Result<&GsReport> {
        let s = self.spread()?;
        cached(&self.gs, || check_gs(&self.ideal, s))
    }

    pub fn gd(&self) -> Result<&GsReport> {
        let d = self.dim();
        cached(&self.gd, || check_gs(&self.ideal, d))
    }

    pub fn an_certificate(&self) -> Result<&AnCertificate> {
        cached(&self.an, || an_minus_certificate(&self.ideal, self.an_asserted))
    }

    /// A general minimal reduction, which realizes `r(I)`.
    pub fn general_reduction(&self) -> Result<&ReductionData> {
        cached(&self.general, || {
            random_minimal_reduction_with(&self.ideal, self.presentation()?, self.seed)
        })
    }

    /// The supplied reduction if there is one, else a general one.
    pub fn reduction(&self) -> Result<&ReductionData> {
        let Some(j) = &self.explicit_reduction else {
            return self.general_reduction();
        };
        cached(&self.explicit, || {
            let r = reduction::reduction_number(&self.ideal, j, REDUCTION_CAP)?;
            let t = reduction::tau(&self.ideal, j, REDUCTION_CAP)?;
            Ok(ReductionData {
                j: j.clone(),
                coefficients: Vec::new(),
                seed: self.seed,
                attempts: 0,
                r_j: Some(r),
                r_j_from_fiber: None,
                tau_j: Some(t),
                is_minimal: j.mu()? == self.spread()?,
            })
        })
    }

    /// The reduction realizing `r(I)`: general when `I` is equigenerated,
    /// otherwise the supplied one.
    pub fn minimal_number_reduction(&self) -> Result<(&ReductionData, bool)> {
        if self.ideal.generating_degree().is_some() {
            Ok((self.general_reduction()?, true))
        } else if self.explicit_reduction.is_some() {
            Ok((self.reduction()?, false))
        } else {
            Err(Error::NotEquigenerated(
                "general reductions need an equigenerated ideal; supply J".into(),
            ))
        }
    }

    pub fn rees_depth(&self) -> Result<AlgebraDepth> {
        cached(&self.rees, || self.presentation()?.rees_depth()).copied()
    }

    pub fn agr_depth(&self) -> Result<AlgebraDepth> {
        cached(&self.agr, || self.presentation()?.agr_depth()).copied()
    }

    pub fn fiber_depth(&self) -> Result<AlgebraDepth> {
        cached(&self.fiber, || self.presentation()?.fiber_depth()).copied()
    }

    pub fn jmult(&self) -> Result<&JMultReport> {
        cached(&self.jmult, || j_multiplicity(&self.ideal, self.seed))
    }

    /// `depth R/I^j`; `None` for the zero ring.
    pub fn power_depth(&self, j: u32) -> Result<Option<usize>> {
        if let Some(v) = self.power_depths.lock().unwrap().get(&j) {
            return Ok(*v);
        }
        let v = resolution::depth_of_quotient(&self.ideal.power_compact(j)?)?;
        self.power_depths.lock().unwrap().insert(j, v);
        Ok(v)
    }

    /// `depth R/I^j >= bound(j)` for every `j` in `range`.
    pub fn power_depths_at_least(
        &self,
        range: std::ops::RangeInclusive<i64>,
        bound: impl Fn(i64) -> i64,
    ) -> Result<(bool, Vec<i64>)> {
        let mut all = true;
        let mut seen = Vec::new();
        for j in range {
            if j < 1 {
                continue;
            }
            let depth = self.power_depth(j as u32)?.map_or(i64::MAX, |v| v as i64);
            seen.push(depth);
            if depth < bound(j) {
                all = false;
            }
        }
        Ok((all, seen))
    }

    pub(crate) fn an_status(&self) -> Result<(HypothesisStatus, String)> {
        let cert = self.an_certificate()?;
        Ok(match cert.method {
            Some(AnMethod::UserAsserted) => (HypothesisStatus::UserAsserted, "asserted by caller".into()),
            Some(m) => (HypothesisStatus::CertifiedBySufficientCondition, serde_plain(&m)),
            None => (HypothesisStatus::Failed, "no sufficient condition applies".into()),
        })
    }
}

fn serde_plain(m: &AnMethod) -> String {
    match m {
        AnMethod::Equimultiple => "equimultiple",
        AnMethod::DeviationOneGenericallyCi => "deviation-one-generically-ci",
        AnMethod::DepthConditions => "depth-conditions",
        AnMethod::SlidingDepth => "sliding-depth",
        AnMethod::StronglyCohenMacaulay => "strongly-cohen-macaulay",
        AnMethod::UserAsserted => "user-asserted",
    }
    .into()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        let mut b = ReportBuilder::new("t");
        b.hypothesis("h", HypothesisStatus::Verified, "");
        b.conclusion("c", false);
        assert_eq!(b.finish().verdict, Verdict::Violation);
        let mut b = ReportBuilder::new("t");
        b.hypothesis("h", HypothesisStatus::Failed, "");
        b.conclusion("c", false);
        assert_eq!(b.finish().verdict, Verdict::HypothesesNotMet);
        let mut b = ReportBuilder::new("t");
        b.hypothesis("h", HypothesisStatus::UserAsserted, "");
        b.conclusion("c", true);
        assert_eq!(b.finish().verdict, Verdict::Consistent);
    }
}
