//! Text formats: polynomials and ideal files.
//!
//! Polynomial grammar (whitespace ignored):
//!
//! ```text
//! poly     := ['-'] term (('+' | '-') term)*
//! term     := [integer '*'] monomial | integer
//! monomial := var ['^' nat] ('*' var ['^' nat])*
//! var      := 'x' nat            (1-based)
//! ```
//!
//! An ideal file starts with a header line `d=<int> p=<int>` followed by one
//! polynomial per line. `#` starts a comment; blank lines are skipped.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Exponent, Monomial};
use crate::poly::Polynomial;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    /// Reads a run of ASCII digits (after skipping whitespace).
    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        self.digits_raw()
    }

    fn digits_raw(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            // ASCII digits are valid UTF-8
            Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
        }
    }
}

fn parse_u64(text: &str) -> Result<u64> {
    text.parse::<u64>()
        .map_err(|_| Error::CoefficientRange(text.to_string()))
}

/// Parses a polynomial in `nvars` variables over `field`.
pub fn parse_poly(text: &str, nvars: usize, field: PrimeField) -> Result<Polynomial> {
    let mut lx = Lexer::new(text);
    let mut terms: Vec<(Monomial, u32)> = Vec::new();
    let mut negate = lx.eat(b'-');
    loop {
        let (m, c) = parse_term(&mut lx, nvars, field)?;
        terms.push((m, if negate { field.neg(c) } else { c }));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                negate = false;
            }
            Some(b'-') => {
                lx.pos += 1;
                negate = true;
            }
            Some(other) => {
                return lx.err(format!("unexpected character `{}`", other as char));
            }
        }
    }
    Ok(Polynomial::from_terms(nvars, field, terms))
}

fn parse_term(lx: &mut Lexer<'_>, nvars: usize, field: PrimeField) -> Result<(Monomial, u32)> {
    match lx.peek() {
        Some(b) if b.is_ascii_digit() => {
            let lit = lx.digits().unwrap();
            let c = field.reduce_u64(parse_u64(lit)?);
            if lx.eat(b'*') {
                let m = parse_monomial(lx, nvars)?;
                Ok((m, c))
            } else {
                Ok((Monomial::one(nvars), c))
            }
        }
        Some(b'x') => Ok((parse_monomial(lx, nvars)?, 1)),
        Some(other) => lx.err(format!("expected a term, found `{}`", other as char)),
        None => lx.err("expected a term, found end of input"),
    }
}

fn parse_monomial(lx: &mut Lexer<'_>, nvars: usize) -> Result<Monomial> {
    let mut m = Monomial::one(nvars);
    loop {
        if !lx.eat(b'x') {
            return lx.err("expected a variable `x<index>`");
        }
        // the index must follow the `x` directly
        let Some(idx) = lx.digits_raw() else {
            return lx.err("expected a variable index");
        };
        let index: usize = idx
            .parse()
            .map_err(|_| Error::VariableOutOfRange { index: usize::MAX, nvars })?;
        if index == 0 || index > nvars {
            return Err(Error::VariableOutOfRange { index, nvars });
        }
        let mut exp: u64 = 1;
        if lx.eat(b'^') {
            let Some(e) = lx.digits() else {
                return lx.err("expected an exponent");
            };
            exp = e
                .parse::<u64>()
                .ok()
                .filter(|&v| v <= Exponent::MAX as u64)
                .ok_or_else(|| Error::Syntax {
                    pos: lx.pos,
                    msg: format!("exponent `{e}` too large"),
                })?;
        }
        let cur = m.exponent(index - 1) as u64 + exp;
        if cur > Exponent::MAX as u64 {
            return lx.err("exponent overflow");
        }
        m.set_exponent(index - 1, cur as Exponent);
        // a `*` continues the monomial only when a variable follows
        let save = lx.pos;
        if lx.eat(b'*') {
            if lx.peek() == Some(b'x') {
                continue;
            }
            lx.pos = save;
            return lx.err("expected a variable after `*`");
        }
        return Ok(m);
    }
}

/// Contents of an ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub nvars: usize,
    pub field: PrimeField,
    pub generators: Vec<Polynomial>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the `d=<int> p=<int>` header.
fn parse_header(line: &str, offset: usize) -> Result<(usize, PrimeField)> {
    let mut d = None;
    let mut p = None;
    for tok in line.split_whitespace() {
        let Some((k, v)) = tok.split_once('=') else {
            return Err(Error::Syntax {
                pos: offset,
                msg: format!("malformed header token `{tok}`"),
            });
        };
        let val: u64 = v.parse().map_err(|_| Error::Syntax {
            pos: offset,
            msg: format!("header value `{v}` is not an integer"),
        })?;
        match k {
            "d" if d.is_none() => d = Some(val),
            "p" if p.is_none() => p = Some(val),
            _ => {
                return Err(Error::Syntax {
                    pos: offset,
                    msg: format!("unexpected header key `{k}`"),
                })
            }
        }
    }
    let (Some(d), Some(p)) = (d, p) else {
        return Err(Error::Syntax {
            pos: offset,
            msg: "header must be `d=<int> p=<int>`".into(),
        });
    };
    if d == 0 || d > 64 {
        return Err(Error::Syntax {
            pos: offset,
            msg: format!("variable count {d} outside 1..=64"),
        });
    }
    let p = u32::try_from(p).map_err(|_| Error::NotPrime(p))?;
    Ok((d as usize, PrimeField::new(p)?))
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut header = None;
    let mut generators = Vec::new();
    let mut offset = 0usize;
    for raw in text.split_inclusive('\n') {
        let uncommented = strip_comment(raw);
        let line = uncommented.trim();
        let lead = uncommented.len() - uncommented.trim_start().len();
        if !line.is_empty() {
            match header {
                None => header = Some(parse_header(line, offset)?),
                Some((d, field)) => {
                    let poly = parse_poly(line, d, field).map_err(|e| match e {
                        Error::Syntax { pos, msg } => Error::Syntax {
                            pos: pos + offset + lead,
                            msg,
                        },
                        other => other,
                    })?;
                    generators.push(poly);
                }
            }
        }
        offset += raw.len();
    }
    let Some((nvars, field)) = header else {
        return Err(Error::Syntax {
            pos: 0,
            msg: "missing `d=<int> p=<int>` header".into(),
        });
    };
    Ok(IdealFile {
        nvars,
        field,
        generators,
    })
}

pub fn format_ideal_file(nvars: usize, field: PrimeField, gens: &[Polynomial]) -> String {
    let mut out = format!("d={} p={}\n", nvars, field.modulus());
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
