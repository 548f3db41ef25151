mod input;
mod run;

use blowup_core::harness::{example_by_name, Analysis};
use clap::{Parser, Subcommand};
use run::{exit, Job};
use serde_json::{json, Map, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Blowup-algebra invariants and theorem checks for homogeneous ideals.
#[derive(Parser, Debug)]
#[command(name = "blowup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run checks on an ideal from a job file or a built-in example.
    Run {
        /// Job file; see the README for the format.
        file: Option<PathBuf>,
        /// Built-in example: ex61, ex61(d,n), ex62 or ex63.
        #[arg(long, conflicts_with = "file")]
        example: Option<String>,
        /// Comma-separated subset of: jmult, classify, gs, depths, fcm, theo1,
        /// hs, almost-goto, core, examples, family66.
        #[arg(long, required = true, num_args = 1..)]
        checks: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Reductions intersected by `core`, samples drawn by `family66`.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// `d,n` for the `family66` check.
        #[arg(long, default_value = "3,4", value_parser = parse_shape)]
        family_shape: (usize, usize),
        /// Write the JSON report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Skip the per-check summary on stderr.
        #[arg(long, short)]
        quiet: bool,
    },
    /// Draw ideals K between a reduction J and a linearly presented height
    /// two ideal I, and compare Goto-minimality with membership in I m^(n-d-1) + J.
    Family {
        d: usize,
        n: usize,
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Also compute the depths of R(K), G(K) and F(K).
        #[arg(long)]
        algebras: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, short)]
        quiet: bool,
    },
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (d, n) = s.split_once(',').ok_or("expected d,n")?;
    let p = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("`{v}`: {e}"));
    Ok((p(d)?, p(n)?))
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("blowup: {msg}");
    ExitCode::from(exit::INPUT_ERROR as u8)
}

fn emit(report: &Value, output: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(report).expect("json values serialize") + "\n";
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(
    file: Option<PathBuf>,
    example: Option<String>,
    seed: u64,
) -> Result<(String, Option<Analysis>, Option<input::InputEcho>), String> {
    if let Some(name) = example {
        let e = example_by_name(&name).map_err(|e| e.to_string())?;
        let echo = input::InputEcho::of(&e.ideal, e.reduction.as_ref(), e.an_known);
        return Ok((
            format!("example:{}", e.name),
            Some(Analysis::from_example(&e).with_seed(seed)),
            Some(echo),
        ));
    }
    let Some(path) = file else {
        return Ok(("none".into(), None, None));
    };
    let src = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let job = input::parse_job(&src).map_err(|e| format!("{}: {e}", path.display()))?;
    let analysis = Analysis::new(job.ideal)
        .with_seed(seed)
        .with_reduction(job.reduction)
        .with_an_asserted(job.an_asserted);
    // the echo names the file, not the path it was reached by
    let name = path
        .file_name()
        .map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    Ok((format!("file:{name}"), Some(analysis), Some(job.echo)))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INPUT_ERROR
            } else {
                exit::CONSISTENT
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match cli.command {
        Command::Run {
            file,
            example,
            checks,
            seed,
            trials,
            family_shape,
            output,
            quiet,
        } => {
            let checks = match run::parse_checks(&checks) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let (source, analysis, echo) = match load(file, example, seed) {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            let job = Job {
                source,
                analysis,
                echo,
                checks,
                seed,
                trials: trials.max(1),
                family_shape,
                threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            if let Err(e) = job.validate() {
                return fail(e);
            }
            let out = run::run(&job);
            if !quiet {
                for line in &out.summary {
                    eprintln!("{line}");
                }
            }
            if let Err(e) = emit(&out.report, output.as_ref()) {
                return fail(e);
            }
            ExitCode::from(out.exit_code as u8)
        }
        Command::Family {
            d,
            n,
            count,
            seed,
            threads,
            algebras,
            output,
            quiet,
        } => {
            if !(3 <= d && d < n) {
                return fail(format!("family needs 3 <= d < n, got d = {d}, n = {n}"));
            }
            let started = Instant::now();
            let rep = match run::run_family(d, n, count, seed, threads, algebras) {
                Ok(r) => r,
                Err(e) => return fail(format!("family: {e}")),
            };
            let code = if rep.disagreements > 0 {
                exit::VIOLATION
            } else if !rep.errors.is_empty() {
                exit::INPUT_ERROR
            } else {
                exit::CONSISTENT
            };
            if !quiet {
                eprintln!("{}", run::family_line(&rep));
            }
            let mut body = Map::new();
            body.insert(
                "input".into(),
                json!({ "d": d, "n": n, "count": count, "seed": seed, "algebras": algebras }),
            );
            body.insert("family".into(), serde_json::to_value(&rep).expect("report serializes"));
            body.insert("outcome".into(), json!({ "exit_code": code }));
            let report = run::seal(body, json!({ "total_wall_ms": started.elapsed().as_secs_f64() * 1e3 }));
            if let Err(e) = emit(&report, output.as_ref()) {
                return fail(e);
            }
            ExitCode::from(code as u8)
        }
    }
}
