//! Standard-basis tools for local orders, computed modulo `m^T`.
//!
//! Leading terms are least terms. Since the local orders are not degree
//! compatible, a leading monomial seen at level `T` may disappear at `T + 1`;
//! [`staircase_stable`] checks for that.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::order::OrderSpec;
use crate::poly::Polynomial;
use crate::trunc::{for_each_product, ideal_image_ordered, ColumnBasis, TruncationLevel};

/// Minimal generators of the truncated leading-term ideal with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub order: OrderSpec,
    pub trunc: TruncationLevel,
    pub generators: Vec<Monomial>,
    pub witnesses: Vec<Polynomial>,
}

pub fn truncated_staircase(gens: &[Polynomial], ord: &OrderSpec, trunc: TruncationLevel) -> Result<Staircase> {
    let img = ideal_image_ordered(gens, ord, trunc)?;
    let pivots: Vec<Monomial> = img.pivots().cloned().collect();
    // pivots arrive ascending under `ord`; a divisor of a monomial is never
    // larger than it, so one pass against the kept list suffices
    let mut generators: Vec<Monomial> = Vec::new();
    for p in pivots {
        if !generators.iter().any(|g| g.divides(&p)) {
            generators.push(p);
        }
    }
    let witnesses = generators
        .iter()
        .map(|g| img.element_with_pivot(g).expect("pivot row exists"))
        .collect();
    Ok(Staircase {
        order: *ord,
        trunc,
        generators,
        witnesses,
    })
}

/// Staircases at `T` and `T + 1` agree on generators of degree `< T - 1`.
pub fn staircase_stable(gens: &[Polynomial], ord: &OrderSpec, trunc: TruncationLevel) -> Result<bool> {
    let t = trunc.get();
    let a = truncated_staircase(gens, ord, trunc)?;
    let b = truncated_staircase(gens, ord, TruncationLevel::new(t + 1)?)?;
    let low = |s: &Staircase| -> Vec<Monomial> {
        s.generators
            .iter()
            .filter(|m| m.degree() + 1 < t)
            .cloned()
            .collect()
    };
    Ok(low(&a) == low(&b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionStep {
    pub term: Monomial,
    pub coefficient: u32,
    pub basis_index: usize,
    pub multiplier: Monomial,
}

impl fmt::Display for DivisionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cancel {}*{} using g{} times {}",
            self.coefficient,
            self.term,
            self.basis_index + 1,
            self.multiplier
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub trace: Vec<DivisionStep>,
}

/// Division with remainder modulo `m^T`: `f ≡ Σ q_i g_i + r` and no term of
/// `r` is divisible by any `LT(g_i)`.
///
/// Terms are processed from the least upward; cancelling `c*t` with
/// `(c/lc) * (t/LT(g)) * g` only creates larger terms, so the loop ends.
/// Among several usable basis elements the lowest index wins.
pub fn hironaka_divide(f: &Polynomial, basis: &[Polynomial], ord: &OrderSpec, trunc: TruncationLevel) -> Result<Division> {
    if !ord.is_local() {
        return Err(Error::WrongOrderKind(ord.to_string()));
    }
    let t = trunc.get();
    let field = f.field();
    let nvars = f.nvars();
    let mut leads = Vec::with_capacity(basis.len());
    for g in basis {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        leads.push(ord.leading_term(g)?);
    }
    if nvars != ord.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ord.nvars(),
            got: nvars,
        });
    }
    let mut quotient_terms: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); basis.len()];
    let mut remainder = Vec::new();
    let mut trace = Vec::new();
    let mut work = f.truncate(t);
    while let Some((m, c)) = work.terms().iter().min_by(|a, b| ord.cmp(&a.0, &b.0)).cloned() {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let u = m.div(&leads[i].0).unwrap();
                let q = field.mul(c, field.inv(leads[i].1));
                work = work.add_scaled(&basis[i].mul_term(&u, 1), field.neg(q)).truncate(t);
                quotient_terms[i].push((u.clone(), q));
                trace.push(DivisionStep {
                    term: m,
                    coefficient: c,
                    basis_index: i,
                    multiplier: u,
                });
            }
            None => {
                work = work.add_scaled(&Polynomial::term(m.clone(), c, field), field.neg(1));
                remainder.push((m, c));
            }
        }
    }
    Ok(Division {
        quotients: quotient_terms
            .into_iter()
            .map(|ts| Polynomial::from_terms(nvars, field, ts))
            .collect(),
        remainder: Polynomial::from_terms(nvars, field, remainder),
        trace,
    })
}

/// Drops every `y_i ∈ mI + (y_{i+1}, ..., y_m)` and returns the survivors in
/// their original order together with their count.
///
/// The scan runs from the right, adding only survivors to the span; a
/// dropped element already lies in `mI` plus the later survivors, so this is
/// the same test.
pub fn superfluous_filter(basis: &[Polynomial], trunc: TruncationLevel) -> Result<(Vec<Polynomial>, usize)> {
    let Some(first) = basis.first() else {
        return Ok((Vec::new(), 0));
    };
    let (nvars, field) = (first.nvars(), first.field());
    let cols = ColumnBasis::graded(nvars, trunc.get());
    let mut ech = Echelon::new(field, cols.len());
    for_each_product(basis, &cols, 1, |_, row| {
        ech.insert(&row);
    });
    let mut keep = vec![false; basis.len()];
    for (i, y) in basis.iter().enumerate().rev() {
        if ech.insert(&cols.row_of(y)).is_some() {
            keep[i] = true;
        }
    }
    let kept: Vec<Polynomial> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(y, _)| y.clone())
        .collect();
    let mu = kept.len();
    Ok((kept, mu))
}

/// Leading monomials involve only `x_1..x_g`, and any two of them differ in
/// some exponent `e_i` with `i < g`.
pub fn check_block_staircase(gens: &[Polynomial], g: usize, ord: &OrderSpec, trunc: TruncationLevel) -> Result<bool> {
    if g == 0 || g > ord.nvars() {
        return Err(Error::Precondition(format!("need 1 <= g <= {}", ord.nvars())));
    }
    let s = truncated_staircase(gens, ord, trunc)?;
    let ok_support = s
        .generators
        .iter()
        .all(|m| m.exponents()[g..].iter().all(|&e| e == 0));
    let ok_distinct = s.generators.iter().enumerate().all(|(i, a)| {
        s.generators[i + 1..]
            .iter()
            .all(|b| (0..g - 1).any(|k| a.exponent(k) != b.exponent(k)))
    });
    Ok(ok_support && ok_distinct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;
    use crate::trunc::maximal_power_generators;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn polys(src: &[&str], d: usize) -> Vec<Polynomial> {
        src.iter().map(|s| parse_poly(s, d, f()).unwrap()).collect()
    }

    fn t(v: u32) -> TruncationLevel {
        TruncationLevel::new(v).unwrap()
    }

    fn mons(src: &[&str], d: usize) -> Vec<Monomial> {
        polys(src, d).iter().map(|p| p.terms()[0].0.clone()).collect()
    }

    #[test]
    fn staircase_examples() {
        let s = truncated_staircase(&polys(&["x1^2", "x2^3"], 2), &OrderSpec::lex(2), t(6)).unwrap();
        assert_eq!(s.generators, mons(&["x1^2", "x2^3"], 2));
        let o = OrderSpec::block(3, 3).unwrap();
        let s = truncated_staircase(&polys(&["x3^4 + x1^3*x2^2"], 3), &o, t(7)).unwrap();
        assert!(s.generators.contains(&mons(&["x3^4"], 3)[0]));
        let s = truncated_staircase(&maximal_power_generators(2, f(), 2), &OrderSpec::lex(2), t(5)).unwrap();
        let mut got = s.generators.clone();
        got.sort();
        assert_eq!(got, mons(&["x1^2", "x1*x2", "x2^2"], 2));
        for (g, w) in s.generators.iter().zip(&s.witnesses) {
            assert_eq!(&OrderSpec::lex(2).leading_term(w).unwrap().0, g);
        }
    }

    #[test]
    fn stability_examples() {
        let gens = polys(&["x1^2", "x2^3"], 2);
        assert!(staircase_stable(&gens, &OrderSpec::lex(2), t(6)).unwrap());
    }

    #[test]
    fn division_examples() {
        let lex = OrderSpec::lex(2);
        let d = hironaka_divide(&polys(&["x1^2 + x2"], 2)[0], &polys(&["x2"], 2), &lex, t(6)).unwrap();
        assert_eq!(d.quotients, polys(&["1"], 2));
        assert_eq!(d.remainder, polys(&["x1^2"], 2)[0]);

        let g = polys(&["x1^2 + x2^5"], 2);
        let d = hironaka_divide(&g[0], &g, &lex, t(8)).unwrap();
        assert_eq!(d.quotients, polys(&["1"], 2));
        assert!(d.remainder.is_zero());

        // x1*x2^5 is not divisible by LT = x1^2
        let d = hironaka_divide(&polys(&["x1^3"], 2)[0], &g, &lex, t(8)).unwrap();
        assert_eq!(d.quotients, polys(&["x1"], 2));
        assert_eq!(d.remainder, polys(&["-x1*x2^5"], 2)[0]);
        assert_eq!(d.trace.len(), 1);
    }

    #[test]
    fn superfluous_examples() {
        let (_, mu) = superfluous_filter(&polys(&["x1", "x1 + x1*x2"], 2), t(4)).unwrap();
        assert_eq!(mu, 1);
        let (kept, mu) = superfluous_filter(&polys(&["x1^2", "x1*x2", "x2^2", "x1^3"], 2), t(5)).unwrap();
        assert_eq!(mu, 3);
        assert_eq!(kept, polys(&["x1^2", "x1*x2", "x2^2"], 2));
    }

    #[test]
    fn block_staircase_examples() {
        let o = OrderSpec::block(2, 3).unwrap();
        assert!(check_block_staircase(&polys(&["x1^2", "x2^3"], 3), 2, &o, t(6)).unwrap());
        assert!(!check_block_staircase(&polys(&["x1^2", "x3^3"], 3), 2, &o, t(6)).unwrap());
    }
}
