//! Text format for polynomials.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power (['*'] power)*        juxtaposition multiplies: 2x, 3(x+y)
//! power   := unary ['^' nat]
//! unary   := '-' unary | atom
//! atom    := nat | var | '(' expr ')'
//! var     := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace between tokens is ignored. Coefficients are reduced modulo the
//! characteristic, exponents are not. `-x^2` parses as `-(x^2)`, and `x2` is a
//! single variable name, so products of indexed variables need `*` or a space.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    /// Value mod p, plus the exact value when it fits in 32 bits.
    Num(u32, Option<u32>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str, p: u32) -> Result<Vec<(usize, Tok)>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < b.len() {
        let c = b[pos];
        let start = pos;
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut reduced: u64 = 0;
                let mut exact: Option<u64> = Some(0);
                while pos < b.len() && b[pos].is_ascii_digit() {
                    let dgt = (b[pos] - b'0') as u64;
                    reduced = (reduced * 10 + dgt) % p as u64;
                    exact = exact
                        .and_then(|v| v.checked_mul(10))
                        .and_then(|v| v.checked_add(dgt))
                        .filter(|&v| v <= u32::MAX as u64);
                    pos += 1;
                }
                out.push((start, Tok::Num(reduced as u32, exact.map(|v| v as u32))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while pos < b.len() && (b[pos].is_ascii_alphanumeric() || b[pos] == b'_') {
                    pos += 1;
                }
                out.push((start, Tok::Ident(src[start..pos].to_string())));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        pos += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'r> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: &'r PolyRing,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = acc.checked_mul(&self.power()?)?;
                }
                Some(Tok::Num(..)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.checked_mul(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.unary()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            let off = self.offset();
            let e = match self.peek() {
                Some(Tok::Num(_, Some(e))) => *e,
                Some(Tok::Num(_, None)) => return self.err("exponent too large"),
                _ => return self.err("expected exponent after `^`"),
            };
            self.at += 1;
            return base.checked_pow(e).map_err(|_| Error::Parse {
                offset: off,
                message: format!("exponent {e} overflows"),
            });
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.peek() {
            self.at += 1;
            return Ok(self.unary()?.neg());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Num(v, _))) => {
                self.at += 1;
                Ok(Polynomial::constant(self.ring, v as i64))
            }
            Some((off, Tok::Ident(name))) => {
                self.at += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name, offset: off }),
                }
            }
            Some((_, Tok::LParen)) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some((_, t)) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `ring`. Offsets in errors are byte offsets into `src`.
pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial> {
    let toks = lex(src, ring.field().characteristic())?;
    if toks.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
        ring,
    };
    let f = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Prints with symmetric coefficients, e.g. `x^2-y*w` or `-3*x*y+1`.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let ring = f.ring();
    let field = ring.field();
    let mut s = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let c = field.to_signed(t.coeff);
        let (neg, abs) = (c < 0, c.unsigned_abs());
        if neg {
            s.push('-');
        } else if k > 0 {
            s.push('+');
        }
        let mut factors: Vec<String> = Vec::new();
        if abs != 1 || t.mono.is_one() {
            factors.push(abs.to_string());
        }
        for i in 0..ring.nvars() {
            match t.mono.exp(i) {
                0 => {}
                1 => factors.push(ring.names()[i].clone()),
                e => factors.push(format!("{}^{e}", ring.names()[i])),
            }
        }
        s.push_str(&factors.join("*"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring4() -> PolyRing {
        PolyRing::standard(&["x", "y", "z", "w"], PrimeField::default()).unwrap()
    }

    #[test]
    fn minor_parses_to_two_terms() {
        let r = ring4();
        let f = parse_polynomial("x^2-y*w", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(format_polynomial(&f), "x^2-y*w");
    }

    #[test]
    fn zero_and_characteristic_cancellation() {
        let r = ring4();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        let p = r.field().characteristic();
        let src = format!("x+x+ ({}-2)*x", p);
        assert!(parse_polynomial(&src, &r).unwrap().is_zero());
    }

    #[test]
    fn precedence_and_juxtaposition() {
        let r = ring4();
        let a = parse_polynomial("-x^2 + 2x(y+1)", &r).unwrap();
        let b = parse_polynomial("2*x*y + 2*x - x*x", &r).unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("(x+y)^2", &r).unwrap();
        let d = parse_polynomial("x^2+2*x*y+y^2", &r).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring4();
        assert_eq!(
            parse_polynomial("x + q", &r),
            Err(Error::UnknownVariable {
                name: "q".into(),
                offset: 4
            })
        );
        assert!(matches!(
            parse_polynomial("x + * y", &r),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("(x+y", &r),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("x^", &r),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(parse_polynomial("x^300", &r).is_err());
        assert!(parse_polynomial("x $ y", &r).is_err());
    }

    #[test]
    fn negative_coefficients_print_symmetric() {
        let r = ring4();
        let f = parse_polynomial("-3x*y + 1", &r).unwrap();
        assert_eq!(format_polynomial(&f), "-3*x*y+1");
        assert_eq!(parse_polynomial(&format_polynomial(&f), &r).unwrap(), f);
    }
}
