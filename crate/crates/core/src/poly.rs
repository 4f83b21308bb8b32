//! Sparse multivariate polynomials over a prime field.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::ScalarMatrix;
use crate::monomial::Monomial;

/// A polynomial in `k[x_1..x_d]`, `k = F_p`.
///
/// Terms are kept sorted by the canonical [`Monomial`] order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: PrimeField,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: PrimeField) -> Self {
        Polynomial {
            nvars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, field: PrimeField, c: u32) -> Self {
        Self::term(Monomial::one(nvars), field.reduce_u64(c as u64), field)
    }

    pub fn one(nvars: usize, field: PrimeField) -> Self {
        Self::constant(nvars, field, 1)
    }

    /// `x_{var+1}` (zero-based index).
    pub fn variable(nvars: usize, field: PrimeField, var: usize) -> Self {
        Self::term(Monomial::variable(nvars, var), 1, field)
    }

    pub fn term(m: Monomial, c: u32, field: PrimeField) -> Self {
        let nvars = m.nvars();
        let c = field.reduce_u64(c as u64);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(nvars: usize, field: PrimeField, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce_u64(c as u64));
        }
        Self::from_map(nvars, field, acc)
    }

    fn from_map(nvars: usize, field: PrimeField, acc: HashMap<Monomial, u32>) -> Self {
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    /// Terms already sorted canonically with nonzero coefficients.
    pub(crate) fn from_sorted_terms(
        nvars: usize,
        field: PrimeField,
        terms: Vec<(Monomial, u32)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Largest total degree in the support, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Smallest total degree in the support; `None` stands for infinity (zero
    /// polynomial). `f` lies in `m^s \ m^{s+1}` exactly when this is `Some(s)`.
    pub fn order_of_vanishing(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == degree)
            .cloned()
            .collect();
        Self::from_sorted_terms(self.nvars, self.field, terms)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.first(), self.terms.last()) {
            (Some(a), Some(b)) => a.0.degree() == b.0.degree(),
            _ => true,
        }
    }

    /// Drops every term of degree `>= trunc`, i.e. reduces modulo `m^trunc`.
    pub fn truncate(&self, trunc: u32) -> Polynomial {
        let cut = self.terms.partition_point(|(m, _)| m.degree() < trunc);
        Self::from_sorted_terms(self.nvars, self.field, self.terms[..cut].to_vec())
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = self.field.reduce_u64(c as u64);
        if c == 0 {
            return Self::zero(self.nvars, self.field);
        }
        let f = self.field;
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect();
        Self::from_sorted_terms(self.nvars, self.field, terms)
    }

    /// `c * t * self` for a monomial `t`.
    pub fn mul_term(&self, t: &Monomial, c: u32) -> Polynomial {
        let c = self.field.reduce_u64(c as u64);
        if c == 0 {
            return Self::zero(self.nvars, self.field);
        }
        let f = self.field;
        // the canonical order is multiplicative, so no re-sort
        let terms: Vec<(Monomial, u32)> = self
            .terms
            .iter()
            .map(|(m, a)| (m.mul(t), f.mul(*a, c)))
            .collect();
        Self::from_sorted_terms(self.nvars, self.field, terms)
    }

    /// Makes the coefficient of the canonically last term equal to one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.last() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(*c)),
        }
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
    }

    /// `self + c * other`, merging sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, c: u32) -> Polynomial {
        self.check_compatible(other);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let v = f.mul(*cb, c);
                    if v != 0 {
                        out.push((mb.clone(), v));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = f.add(*ca, f.mul(*cb, c));
                    if v != 0 {
                        out.push((ma.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, cb) in &other.terms[j..] {
            let v = f.mul(*cb, c);
            if v != 0 {
                out.push((m.clone(), v));
            }
        }
        Self::from_sorted_terms(self.nvars, self.field, out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x_i -> sum_j M[i][j] x_j`. Rejects singular `M`.
    pub fn apply_linear_change(&self, m: &ScalarMatrix) -> Result<Polynomial> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: m.rows(),
            });
        }
        if m.field() != self.field {
            return Err(Error::Precondition("matrix over a different field".into()));
        }
        if m.rank() < self.nvars {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_linear(m))
    }

    /// Linear substitution without the invertibility check; also used for
    /// rectangular maps to fewer or more variables (`m` is `nvars x new_nvars`).
    pub fn substitute_linear(&self, m: &ScalarMatrix) -> Polynomial {
        let new_nvars = m.cols();
        let images: Vec<Polynomial> = (0..self.nvars)
            .map(|i| {
                Polynomial::from_terms(
                    new_nvars,
                    self.field,
                    (0..new_nvars).map(|j| (Monomial::variable(new_nvars, j), m.get(i, j))),
                )
            })
            .collect();
        // cache powers of each linear image
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(new_nvars, self.field), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        let f = self.field;
        for (mono, c) in &self.terms {
            let mut prod = Polynomial::constant(new_nvars, self.field, *c);
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e as usize];
            }
            for (m2, c2) in prod.terms {
                let e = acc.entry(m2).or_insert(0);
                *e = f.add(*e, c2);
            }
        }
        Self::from_map(new_nvars, self.field, acc)
    }

    /// Embeds into a ring with `extra` additional trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extend_vars(extra), *c))
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.nvars + extra, self.field, terms)
    }

    /// Image under `x_var -> 0`, living in one fewer variable.
    pub fn drop_var(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) == 0)
            .map(|(m, c)| (m.remove_var(var), *c))
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.nvars - 1, self.field, terms)
    }

    /// Renames variables: new variable `i` is old variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permute(perm), *c))
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.nvars, self.field, terms)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, self.field.neg(1))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.field.neg(1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars, f);
        }
        let mut acc: HashMap<Monomial, u32> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = f.add(*e, f.mul(*ca, *cb));
            }
        }
        Polynomial::from_map(self.nvars, f, acc)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text form accepted back by [`crate::parse::parse_poly`]. Coefficients are
/// printed as canonical representatives in `[0, p)`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}
