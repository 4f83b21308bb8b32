//! Exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// A monomial `x_1^{e_1} ... x_d^{e_d}` stored as its exponent vector.
///
/// The `Ord` impl is the canonical storage order used for polynomial term
/// tables: ascending total degree, ties broken by the exponent vector in
/// descending lexicographic order (so `x1^2 < x1*x2 < x2^2`). It is not one of
/// the algebraic orders of [`crate::order`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[Exponent; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `x_{var+1}` (zero-based `var`).
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> Exponent {
        self.0[var]
    }

    pub fn set_exponent(&mut self, var: usize, e: Exponent) {
        self.0[var] = e;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// True iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Bitmask of the support; valid for at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |acc, i| acc | (1u64 << i))
    }

    /// Appends `extra` variables with exponent zero.
    pub fn extend_vars(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }

    /// Removes the variable at `var`; the caller guarantees its exponent is zero
    /// or intends to drop it.
    pub fn remove_var(&self, var: usize) -> Monomial {
        let mut v = self.0.clone();
        v.remove(var);
        Monomial(v)
    }

    /// Reorders variables: new variable `i` takes the exponent of old variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        Monomial(perm.iter().map(|&j| self.0[j]).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials in `nvars` variables of total degree exactly `degree`, in
/// canonical order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0 as Exponent; nvars];
    fill_degree(&mut out, &mut cur, 0, degree);
    out.sort();
    out
}

fn fill_degree(out: &mut Vec<Monomial>, cur: &mut Vec<Exponent>, var: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial::from_exponents(cur));
        }
        return;
    }
    if var + 1 == cur.len() {
        cur[var] = left as Exponent;
        out.push(Monomial::from_exponents(cur));
        cur[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[var] = e as Exponent;
        fill_degree(out, cur, var + 1, left - e);
    }
    cur[var] = 0;
}

/// All monomials of total degree `< bound`, in canonical order.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    (0..bound)
        .flat_map(|k| monomials_of_degree(nvars, k))
        .collect()
}

/// Binomial coefficient; `C(a, b) = 0` for `b > a`.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
