//! Monomial orders.
//!
//! Two conventions live behind [`OrderSpec`]. The local kinds
//! ([`OrderKind::Block`], [`OrderKind::Lex`]) are well-orders with `1` least and
//! take the *least* term of a polynomial as its leading term, as is done for
//! power series. The global kinds ([`OrderKind::DegRevLex`],
//! [`OrderKind::Elimination`]) take the greatest term, as in Buchberger's
//! algorithm.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Lexicographic on `(e_d, ..., e_{g+1}, e_1 + ... + e_g, e_g, ..., e_1)`.
    Block { g: usize },
    /// Lexicographic on `(e_d, ..., e_1)`.
    Lex,
    /// Graded reverse lexicographic, global convention.
    DegRevLex,
    /// Block order: degrevlex on the variables `split..d` first, then
    /// degrevlex on `0..split`. Eliminates the trailing block.
    Elimination { split: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    kind: OrderKind,
    nvars: usize,
}

impl OrderSpec {
    pub fn new(kind: OrderKind, nvars: usize) -> Result<Self> {
        match kind {
            OrderKind::Block { g } if g == 0 || g > nvars => Err(Error::InvalidOrder(format!(
                "block order needs 1 <= g <= d, got g={g}, d={nvars}"
            ))),
            OrderKind::Elimination { split } if split > nvars => Err(Error::InvalidOrder(
                format!("elimination split {split} exceeds {nvars} variables"),
            )),
            _ => Ok(OrderSpec { kind, nvars }),
        }
    }

    pub fn block(g: usize, nvars: usize) -> Result<Self> {
        Self::new(OrderKind::Block { g }, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        OrderSpec {
            kind: OrderKind::Lex,
            nvars,
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        OrderSpec {
            kind: OrderKind::DegRevLex,
            nvars,
        }
    }

    /// Parses the command-line syntax `paper:g=<int>` (alias `block:g=<int>`),
    /// `lex` or `degrevlex`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let t = text.trim();
        match t {
            "lex" => Ok(Self::lex(nvars)),
            "degrevlex" => Ok(Self::degrevlex(nvars)),
            _ => {
                let g = t
                    .strip_prefix("paper:g=")
                    .or_else(|| t.strip_prefix("block:g="))
                    .and_then(|v| usize::from_str(v).ok())
                    .ok_or_else(|| Error::InvalidOrder(format!("unrecognized order `{t}`")))?;
                Self::block(g, nvars)
            }
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Local kinds use the least-term leading-term convention.
    pub fn is_local(&self) -> bool {
        matches!(self.kind, OrderKind::Block { .. } | OrderKind::Lex)
    }

    /// Comparison without dimension checks; both monomials must have `nvars` variables.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Block { g } => {
                for i in (g..self.nvars).rev() {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                let sa: u32 = ea[..g].iter().map(|&e| e as u32).sum();
                let sb: u32 = eb[..g].iter().map(|&e| e as u32).sum();
                sa.cmp(&sb)
                    .then_with(|| lex_desc_index(&ea[..g], &eb[..g]))
            }
            OrderKind::Lex => lex_desc_index(ea, eb),
            OrderKind::DegRevLex => degrevlex(ea, eb),
            OrderKind::Elimination { split } => {
                degrevlex(&ea[split..], &eb[split..]).then_with(|| degrevlex(&ea[..split], &eb[..split]))
            }
        }
    }

    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars,
                    got: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Leading monomial and coefficient: the least term for local kinds, the
    /// greatest for global ones.
    pub fn leading_term(&self, f: &Polynomial) -> Result<(Monomial, u32)> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: f.nvars(),
            });
        }
        let pick = if self.is_local() {
            f.terms().iter().min_by(|a, b| self.cmp(&a.0, &b.0))
        } else {
            f.terms().iter().max_by(|a, b| self.cmp(&a.0, &b.0))
        };
        pick.cloned().ok_or(Error::ZeroPolynomial)
    }
}

/// Lexicographic comparison reading the exponent vectors from the last
/// variable down to the first.
#[inline]
fn lex_desc_index(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => {}
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::Block { g } => write!(f, "paper:g={g}"),
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::DegRevLex => write!(f, "degrevlex"),
            OrderKind::Elimination { split } => write!(f, "elim:{split}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn block_order_examples() {
        // keys (0, 5, 0, 5) < (1, 0, 0, 0)
        let o = OrderSpec::block(2, 3).unwrap();
        assert_eq!(o.cmp(&m(&[5, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
        // keys (4, 0, 4, 0) < (5, 0, 2, 3)
        let o3 = OrderSpec::block(3, 3).unwrap();
        assert_eq!(o3.cmp(&m(&[0, 0, 4]), &m(&[3, 2, 0])), Ordering::Less);
    }

    #[test]
    fn one_is_least_for_every_kind() {
        let kinds = [
            OrderSpec::block(2, 3).unwrap(),
            OrderSpec::lex(3),
            OrderSpec::degrevlex(3),
        ];
        for o in kinds {
            for t in [m(&[1, 0, 0]), m(&[0, 0, 1]), m(&[2, 3, 1])] {
                assert_eq!(o.cmp(&Monomial::one(3), &t), Ordering::Less);
            }
        }
    }

    #[test]
    fn leading_terms() {
        let f = PrimeField::default();
        let p = parse_poly("x3^4 + x1^3*x2^2", 3, f).unwrap();
        let o = OrderSpec::block(3, 3).unwrap();
        assert_eq!(o.leading_term(&p).unwrap().0, m(&[0, 0, 4]));
        let q = parse_poly("1 + x1", 2, f).unwrap();
        assert_eq!(OrderSpec::lex(2).leading_term(&q).unwrap().0, Monomial::one(2));
        let r = parse_poly("x1^2 + x1^3", 2, f).unwrap();
        assert_eq!(OrderSpec::lex(2).leading_term(&r).unwrap().0, m(&[2, 0]));
        assert_eq!(
            OrderSpec::degrevlex(2).leading_term(&r).unwrap().0,
            m(&[3, 0])
        );
        assert_eq!(
            OrderSpec::lex(2).leading_term(&Polynomial::zero(2, f)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(OrderSpec::parse("paper:g=2", 4).unwrap().kind(), OrderKind::Block { g: 2 });
        assert_eq!(OrderSpec::parse("lex", 4).unwrap().kind(), OrderKind::Lex);
        assert!(OrderSpec::parse("paper:g=5", 4).is_err());
        assert!(OrderSpec::parse("paper:g=0", 4).is_err());
        assert_eq!(OrderSpec::parse("block:g=3", 4).unwrap(), OrderSpec::block(3, 4).unwrap());
        assert!(OrderSpec::parse("grlex", 4).is_err());
        let o = OrderSpec::lex(2);
        assert!(o.compare_monomials(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn degrevlex_ties() {
        let o = OrderSpec::degrevlex(3);
        // x1*x3 < x2^2 in degrevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 2, 0])), Ordering::Greater);
    }
}
