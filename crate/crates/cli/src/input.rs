//! The job file format.
//!
//! ```text
//! # comments run to the end of the line
//! ring x, y, z            # variables, separated by commas or spaces
//! char 32003              # optional, default 32003
//! order grevlex           # optional: grevlex (default) or lex
//! weights 1 1 1           # optional positive variable degrees
//! x^2 - y^2               # one generator per line
//! x*y
//! reduction               # generators after this line span J
//! x^2 - y^2
//! assume an               # AN^- is known for this ideal
//! ```
//!
//! The `ring` line comes before any polynomial. Everything that is not a
//! keyword line is a polynomial in the grammar of `blowup_core::parse`.

use blowup_core::parse::parse_polynomial;
use blowup_core::{Error, Ideal, MonomialOrder, PolyRing, Polynomial, PrimeField};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for InputError {}

/// A parsed job file, with the text of each generator kept for the echo.
#[derive(Debug, Clone)]
pub struct JobInput {
    pub ideal: Ideal,
    pub reduction: Option<Ideal>,
    pub an_asserted: bool,
    pub echo: InputEcho,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub variables: Vec<String>,
    pub characteristic: u32,
    pub order: String,
    pub weights: Vec<u32>,
    pub generators: Vec<String>,
    pub reduction: Option<Vec<String>>,
    pub an_asserted: bool,
}

impl InputEcho {
    pub fn of(ideal: &Ideal, reduction: Option<&Ideal>, an_asserted: bool) -> Self {
        let ring = ideal.ring();
        let text = |i: &Ideal| i.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>();
        InputEcho {
            variables: ring.names().to_vec(),
            characteristic: ring.field().characteristic(),
            order: order_name(ring.order()),
            weights: ring.weights().to_vec(),
            generators: text(ideal),
            reduction: reduction.map(text),
            an_asserted,
        }
    }
}

fn order_name(o: &MonomialOrder) -> String {
    match o {
        MonomialOrder::GRevLex | MonomialOrder::WeightedGRevLex => "grevlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::BlockElimination(k) => format!("block({k})"),
    }
}

struct Line<'a> {
    number: usize,
    /// Column of `text` within the original line, 1-based.
    column: usize,
    text: &'a str,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError {
        line,
        column,
        message: message.into(),
    }
}

fn strip(number: usize, raw: &str) -> Option<Line<'_>> {
    let body = raw.split('#').next().unwrap_or("");
    let trimmed = body.trim_start();
    let column = body.len() - trimmed.len() + 1;
    let text = trimmed.trim_end();
    (!text.is_empty()).then_some(Line { number, column, text })
}

/// Splits `keyword rest` when the first word is `keyword`.
fn keyword<'a>(line: &Line<'a>, word: &str) -> Option<(usize, &'a str)> {
    let rest = line.text.strip_prefix(word)?;
    if !(rest.is_empty() || rest.starts_with(char::is_whitespace)) {
        return None;
    }
    let args = rest.trim_start();
    Some((line.column + line.text.len() - args.len(), args))
}

#[derive(Default)]
struct Header {
    names: Option<(usize, Vec<String>)>,
    characteristic: Option<u64>,
    order: Option<MonomialOrder>,
    weights: Option<(usize, Vec<u32>)>,
}

impl Header {
    fn ring(&self, line: usize) -> Result<PolyRing, InputError> {
        let Some((ring_line, names)) = &self.names else {
            return Err(err(line, 1, "a `ring` line must come before the first polynomial"));
        };
        let field =
            PrimeField::new(self.characteristic.unwrap_or(32003)).map_err(|e| err(*ring_line, 1, e.to_string()))?;
        let (wline, weights) = match &self.weights {
            Some((l, w)) => (*l, w.clone()),
            None => (*ring_line, vec![1; names.len()]),
        };
        let order = match (self.order.clone(), weights.iter().all(|&w| w == 1)) {
            (Some(o), _) => o,
            (None, true) => MonomialOrder::GRevLex,
            (None, false) => MonomialOrder::WeightedGRevLex,
        };
        let order = match order {
            MonomialOrder::GRevLex if weights.iter().any(|&w| w != 1) => MonomialOrder::WeightedGRevLex,
            o => o,
        };
        PolyRing::new(names.clone(), weights, order, field).map_err(|e| err(wline, 1, e.to_string()))
    }
}

fn parse_words(args: &str) -> Vec<&str> {
    args.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .collect()
}

/// Parses a job file. Errors carry 1-based line and column numbers.
pub fn parse_job(src: &str) -> Result<JobInput, InputError> {
    let mut header = Header::default();
    let mut ring: Option<PolyRing> = None;
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut red: Option<Vec<Polynomial>> = None;
    let mut an_asserted = false;

    for (idx, raw) in src.lines().enumerate() {
        let Some(line) = strip(idx + 1, raw) else {
            continue;
        };
        let n = line.number;
        let header_kw = ["ring", "char", "order", "weights"]
            .into_iter()
            .find_map(|kw| keyword(&line, kw).map(|(col, args)| (kw, col, args)));
        if let Some((kw, col, args)) = header_kw {
            if ring.is_some() {
                return Err(err(
                    n,
                    line.column,
                    format!("`{kw}` must come before the first polynomial"),
                ));
            }
            match kw {
                "ring" => {
                    let names: Vec<String> = parse_words(args).into_iter().map(String::from).collect();
                    if names.is_empty() {
                        return Err(err(n, col, "`ring` needs at least one variable"));
                    }
                    header.names = Some((n, names));
                }
                "char" => {
                    let p = args
                        .parse::<u64>()
                        .map_err(|_| err(n, col, format!("bad characteristic `{args}`")))?;
                    header.characteristic = Some(p);
                }
                "order" => {
                    header.order = Some(match args {
                        "grevlex" => MonomialOrder::GRevLex,
                        "lex" => MonomialOrder::Lex,
                        other => return Err(err(n, col, format!("unknown order `{other}`, expected grevlex or lex"))),
                    });
                }
                _ => {
                    let w = parse_words(args)
                        .into_iter()
                        .map(|w| w.parse::<u32>().map_err(|_| err(n, col, format!("bad weight `{w}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    header.weights = Some((n, w));
                }
            }
            continue;
        }
        if keyword(&line, "reduction").is_some_and(|(_, a)| a.is_empty()) {
            if red.is_some() {
                return Err(err(n, line.column, "a second `reduction` line"));
            }
            red = Some(Vec::new());
            continue;
        }
        if let Some((col, args)) = keyword(&line, "assume") {
            if args != "an" {
                return Err(err(n, col, format!("unknown assumption `{args}`, expected `an`")));
            }
            an_asserted = true;
            continue;
        }
        let r = match &ring {
            Some(r) => r,
            None => ring.insert(header.ring(n)?),
        };
        let f = parse_polynomial(line.text, r).map_err(|e| match e {
            Error::Parse { offset, message } => err(n, line.column + offset, message),
            Error::UnknownVariable { name, offset } => {
                err(n, line.column + offset, format!("unknown variable `{name}`"))
            }
            other => err(n, line.column, other.to_string()),
        })?;
        match &mut red {
            Some(v) => v.push(f),
            None => gens.push(f),
        }
    }

    let ring = match ring {
        Some(r) => r,
        None => header.ring(src.lines().count().max(1))?,
    };
    let last = src.lines().count().max(1);
    if gens.iter().all(|g| g.is_zero()) {
        return Err(err(last, 1, "no nonzero generators"));
    }
    let ideal = Ideal::new(&ring, gens).map_err(|e| err(last, 1, e.to_string()))?;
    let reduction = match red {
        Some(v) if v.is_empty() => return Err(err(last, 1, "`reduction` has no generators")),
        Some(v) => Some(Ideal::new(&ring, v).map_err(|e| err(last, 1, e.to_string()))?),
        None => None,
    };
    let echo = InputEcho::of(&ideal, reduction.as_ref(), an_asserted);
    Ok(JobInput {
        ideal,
        reduction,
        an_asserted,
        echo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_job() {
        let src =
            "# ex63\nring x, y, z\n-x^2+y^2\n-y^2+z^2\nx*y\ny z\nz*x\nreduction\n-x^2+y^2\n-y^2+z^2\nx*y\nassume an\n";
        let job = parse_job(src).unwrap();
        assert_eq!(job.ideal.gens().len(), 5);
        assert_eq!(job.reduction.as_ref().unwrap().gens().len(), 3);
        assert!(job.an_asserted);
        assert_eq!(job.echo.characteristic, 32003);
        assert_eq!(job.echo.variables, ["x", "y", "z"]);
    }

    #[test]
    fn readme_example_parses() {
        let readme = include_str!("../../../README.md");
        let start = readme.find("# ex63 with a fixed reduction").unwrap();
        let end = start + readme[start..].find("```").unwrap();
        let job = parse_job(&readme[start..end]).unwrap();
        assert_eq!(job.ideal.gens().len(), 5);
        assert_eq!(job.reduction.unwrap().gens().len(), 3);
        assert!(job.an_asserted);
    }

    #[test]
    fn reports_line_and_column_of_a_bad_token() {
        let e = parse_job("ring x y\nx^2\n  x*q + y\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        let e = parse_job("ring x y\nx + $\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
    }

    #[test]
    fn rejects_missing_ring_and_late_headers() {
        assert_eq!(parse_job("x^2\n").unwrap_err().line, 1);
        let e = parse_job("ring x\nx\nchar 7\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_job("ring x\nchar 8\nx\n").is_err());
        assert!(parse_job("ring x\n# nothing\n").is_err());
    }

    #[test]
    fn weights_select_the_weighted_order() {
        let job = parse_job("ring x y\nweights 1 2\nx^2 + y\n").unwrap();
        assert_eq!(job.ideal.ring().order(), &MonomialOrder::WeightedGRevLex);
        assert_eq!(job.echo.weights, [1, 2]);
    }
}
