//! Running a job: one JSON object per check, a verdict tally for the exit
//! code, and a hash over everything but the timings.

use crate::input::InputEcho;
use blowup_core::blowup::{a_invariant_f, classify_with_reduction, core_probe};
use blowup_core::harness::{
    builtin_examples, family, verify_almost_goto, verify_fcm, verify_hilbert_series_prop, verify_theo1, Analysis,
    FamilyConfig, FamilyReport, TheoremReport, Verdict,
};
use blowup_core::hilbert;
use blowup_core::ring::default_degree_cap;
use blowup_core::Result as CoreResult;
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

pub const CHECKS: [&str; 11] = [
    "jmult",
    "classify",
    "gs",
    "depths",
    "fcm",
    "theo1",
    "hs",
    "almost-goto",
    "core",
    "examples",
    "family66",
];

/// Checks that look at the input ideal rather than a fixed corpus.
fn needs_ideal(check: &str) -> bool {
    !matches!(check, "examples" | "family66")
}

pub mod exit {
    pub const CONSISTENT: i32 = 0;
    pub const INPUT_ERROR: i32 = 1;
    pub const HYPOTHESES_NOT_MET: i32 = 2;
    pub const VIOLATION: i32 = 3;
}

/// Parses a comma-separated check list, keeping the given order and
/// dropping repeats.
pub fn parse_checks(raw: &[String]) -> std::result::Result<Vec<String>, String> {
    let mut out: Vec<String> = Vec::new();
    for c in raw
        .iter()
        .flat_map(|s| s.split(','))
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        if !CHECKS.contains(&c) {
            return Err(format!("unknown check `{c}`; expected one of {}", CHECKS.join(", ")));
        }
        if !out.iter().any(|o| o == c) {
            out.push(c.to_string());
        }
    }
    if out.is_empty() {
        return Err("the check list is empty".into());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Budgets {
    pub degree_cap: u32,
    pub reduction_cap: u32,
    pub trials: usize,
}

pub struct Job {
    pub source: String,
    /// The analysis of the input ideal, absent for corpus-only jobs.
    pub analysis: Option<Analysis>,
    pub echo: Option<InputEcho>,
    pub checks: Vec<String>,
    pub seed: u64,
    pub trials: usize,
    pub family_shape: (usize, usize),
    pub threads: usize,
}

impl Job {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            degree_cap: self
                .analysis
                .as_ref()
                .map_or_else(default_degree_cap, |a| a.ideal.ring().degree_cap()),
            reduction_cap: blowup_core::blowup::reduction::REDUCTION_CAP,
            trials: self.trials,
        }
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.analysis.is_none() {
            if let Some(c) = self.checks.iter().find(|c| needs_ideal(c)) {
                return Err(format!("check `{c}` needs an input file or --example"));
            }
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    violation: bool,
    not_met: bool,
    error: bool,
}

impl Tally {
    fn verdict(&mut self, v: Verdict) {
        match v {
            Verdict::Violation => self.violation = true,
            Verdict::HypothesesNotMet => self.not_met = true,
            Verdict::Consistent => {}
        }
    }

    fn exit_code(&self) -> i32 {
        if self.violation {
            exit::VIOLATION
        } else if self.error {
            exit::INPUT_ERROR
        } else if self.not_met {
            exit::HYPOTHESES_NOT_MET
        } else {
            exit::CONSISTENT
        }
    }
}

pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
    /// One line per check for the terminal.
    pub summary: Vec<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn theorem(tally: &mut Tally, rep: &TheoremReport) -> Value {
    tally.verdict(rep.verdict);
    to_value(rep)
}

fn run_check(check: &str, job: &Job, tally: &mut Tally) -> CoreResult<(Value, String)> {
    let a = || job.analysis.as_ref().expect("validated");
    Ok(match check {
        "jmult" => {
            let j = a().jmult()?;
            let line = format!(
                "j = {}, l = {}, minimal {}, almost minimal {}, Goto-minimal {}, almost Goto-minimal {}",
                j.j_value,
                j.analytic_spread,
                j.minimal_j,
                j.almost_minimal_j,
                j.goto_minimal_j,
                j.almost_goto_minimal_j
            );
            (to_value(j), line)
        }
        "classify" => {
            let a = a();
            let red = a.reduction()?;
            let cls = classify_with_reduction(&a.ideal, &red.j, a.an_certificate()?)?;
            let line = format!(
                "r_J = {}, Goto-minimal {}, λ(Im/Jm) = {}, almost Goto-minimal {}",
                cls.r_j, cls.goto_minimal, cls.length_im_over_jm, cls.almost_goto_minimal
            );
            let source = if a.explicit_reduction.is_some() {
                "given"
            } else {
                "general"
            };
            let v = json!({
                "classification": to_value(&cls),
                "reduction": to_value(&red.summary()),
                "reduction_source": source,
            });
            (v, line)
        }
        "gs" => {
            let a = a();
            let dim = hilbert::dimension(&a.ideal)?;
            let (spread, height) = (a.spread()?, a.height()?);
            let (gs, gd) = (a.gs()?, a.gd()?);
            let cert = a.an_certificate()?;
            let line = format!(
                "l = {spread}, height = {height}, dim R/I = {dim:?}, G_s {}, G_d {}, AN^- by {:?}",
                gs.holds, gd.holds, cert.method
            );
            let v = json!({
                "dim_quotient": dim,
                "analytic_spread": spread,
                "height": height,
                "gs": to_value(gs),
                "gd": to_value(gd),
                "an_certificate": to_value(cert),
            });
            (v, line)
        }
        "depths" => {
            let a = a();
            let (rd, gd, fd) = (a.rees_depth()?, a.agr_depth()?, a.fiber_depth()?);
            let series = a.presentation()?.fiber_hilbert_series()?;
            // a(F) = r - s needs a reduction number, which mixed degrees do not give without J
            let r = if a.ideal.generating_degree().is_some() || a.explicit_reduction.is_some() {
                a.reduction()?.r_j
            } else {
                None
            };
            let a_inv = match (fd.cohen_macaulay, r) {
                (true, Some(r)) => Some(to_value(&a_invariant_f(&series, r, a.spread()?, true)?)),
                _ => None,
            };
            let line = format!(
                "depth/dim R {}/{}, G {}/{}, F {}/{}",
                rd.depth, rd.dim, gd.depth, gd.dim, fd.depth, fd.dim
            );
            let v = json!({
                "rees": to_value(&rd),
                "associated_graded": to_value(&gd),
                "fiber": to_value(&fd),
                "depth_quotient": a.power_depth(1)?,
                "fiber_hilbert_series": series.to_string(),
                "a_invariant_fiber": a_inv,
            });
            (v, line)
        }
        "fcm" | "theo1" | "hs" | "almost-goto" => {
            let a = a();
            let rep = match check {
                "fcm" => verify_fcm(a)?,
                "theo1" => verify_theo1(a)?,
                "hs" => verify_hilbert_series_prop(a)?,
                _ => verify_almost_goto(a)?,
            };
            let line = format!("{}: {}", rep.theorem, rep.verdict);
            (theorem(tally, &rep), line)
        }
        "core" => {
            let a = a();
            let p = core_probe(&a.ideal, job.trials, job.seed)?;
            let line = format!(
                "stabilized {} after {} reductions, core = I m {}, core = I {}",
                p.stabilized, p.reductions_used, p.equals_im, p.equals_i
            );
            let v = json!({
                "stabilized": p.stabilized,
                "reductions_used": p.reductions_used,
                "equals_i": p.equals_i,
                "equals_im": p.equals_im,
                "core_generators": p.core.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            });
            (v, line)
        }
        "examples" => {
            let mut out = Map::new();
            let mut verdicts = Vec::new();
            for e in builtin_examples()? {
                let a = Analysis::from_example(&e).with_seed(job.seed);
                let mut per = Map::new();
                for (name, rep) in [
                    ("fcm", verify_fcm(&a)),
                    ("theo1", verify_theo1(&a)),
                    ("hs", verify_hilbert_series_prop(&a)),
                    ("almost-goto", verify_almost_goto(&a)),
                ] {
                    let rep = rep?;
                    verdicts.push(format!("{} {name} {}", e.name, rep.verdict));
                    per.insert(name.into(), theorem(tally, &rep));
                }
                out.insert(e.name.clone(), Value::Object(per));
            }
            (Value::Object(out), verdicts.join("; "))
        }
        "family66" => {
            let (d, n) = job.family_shape;
            let rep = run_family(d, n, job.trials, job.seed, job.threads, false)?;
            if rep.disagreements > 0 {
                tally.verdict(Verdict::Violation);
            }
            if !rep.errors.is_empty() {
                tally.error = true;
            }
            (to_value(&rep), family_line(&rep))
        }
        other => unreachable!("unvalidated check {other}"),
    })
}

pub fn run_family(
    d: usize,
    n: usize,
    count: usize,
    seed: u64,
    threads: usize,
    algebras: bool,
) -> CoreResult<FamilyReport> {
    family(&FamilyConfig {
        d,
        n,
        count,
        seed,
        check_algebras: algebras,
        threads: threads.max(1),
    })
}

pub fn family_line(rep: &FamilyReport) -> String {
    format!(
        "({},{}) {} samples: {} agree, {} disagree, {} Goto-minimal, {} outside the r(K) dichotomy, {} errors",
        rep.d,
        rep.n,
        rep.samples.len(),
        rep.agreements,
        rep.disagreements,
        rep.goto_minimal_count,
        rep.dichotomy_failures,
        rep.errors.len()
    )
}

/// Hex SHA-256 of the canonical JSON of `v`.
pub fn digest(v: &Value) -> String {
    let bytes = serde_json::to_vec(v).expect("json values serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Adds the `timestamps` field and the hash of everything else.
pub fn seal(mut body: Map<String, Value>, timings: Value) -> Value {
    body.insert("schema".into(), json!(SCHEMA_VERSION));
    let hash = digest(&Value::Object(body.clone()));
    body.insert("determinism_hash".into(), json!(hash));
    body.insert("timestamps".into(), timings);
    Value::Object(body)
}

pub fn run(job: &Job) -> Outcome {
    let started = Instant::now();
    let mut tally = Tally::default();
    let mut results = Map::new();
    let mut wall = Map::new();
    let mut summary = Vec::new();
    for check in &job.checks {
        let t = Instant::now();
        let value = match run_check(check, job, &mut tally) {
            Ok((v, line)) => {
                summary.push(format!("{check}: {line}"));
                v
            }
            Err(e) => {
                tally.error = true;
                summary.push(format!("{check}: error: {e}"));
                json!({ "error": format!("{check}: {e}") })
            }
        };
        wall.insert(check.clone(), json!(t.elapsed().as_secs_f64() * 1e3));
        results.insert(check.clone(), value);
    }
    let exit_code = tally.exit_code();
    let mut body = Map::new();
    body.insert(
        "input".into(),
        json!({
            "source": job.source,
            "ideal": job.echo.as_ref().map(to_value),
            "checks": job.checks,
            "seed": job.seed,
            "budgets": to_value(&job.budgets()),
            "family_shape": [job.family_shape.0, job.family_shape.1],
        }),
    );
    body.insert("results".into(), Value::Object(results));
    body.insert(
        "outcome".into(),
        json!({
            "violation": tally.violation,
            "hypotheses_not_met": tally.not_met,
            "errors": tally.error,
            "exit_code": exit_code,
        }),
    );
    let timings = json!({
        "check_wall_ms": wall,
        "total_wall_ms": started.elapsed().as_secs_f64() * 1e3,
    });
    Outcome {
        report: seal(body, timings),
        exit_code,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_lists() {
        let raw = vec!["jmult, classify".to_string(), "jmult".to_string()];
        assert_eq!(parse_checks(&raw).unwrap(), ["jmult", "classify"]);
        assert!(parse_checks(&[String::new()]).is_err());
        assert!(parse_checks(&["bogus".to_string()]).is_err());
    }

    #[test]
    fn hash_ignores_timestamps() {
        let mut body = Map::new();
        body.insert("x".into(), json!(1));
        let a = seal(body.clone(), json!({"t": 1.0}));
        let b = seal(body, json!({"t": 2.0}));
        assert_eq!(a["determinism_hash"], b["determinism_hash"]);
        assert_ne!(a, b);
    }

    #[test]
    fn exit_code_precedence() {
        let mut t = Tally::default();
        assert_eq!(t.exit_code(), exit::CONSISTENT);
        t.verdict(Verdict::HypothesesNotMet);
        assert_eq!(t.exit_code(), exit::HYPOTHESES_NOT_MET);
        t.error = true;
        assert_eq!(t.exit_code(), exit::INPUT_ERROR);
        t.verdict(Verdict::Violation);
        assert_eq!(t.exit_code(), exit::VIOLATION);
    }
}
