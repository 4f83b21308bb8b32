//! Linear algebra in `R/m^T`.
//!
//! The quotient `R/m^T` has the monomials of degree `< T` as a basis. An ideal
//! `J` maps onto the subspace spanned by all truncated products `u*f` with `f`
//! a generator and `u` a monomial; that subspace is a [`MacaulayImage`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{Echelon, SparseRow};
use crate::monomial::{monomials_below, monomials_of_degree, Monomial};
use crate::order::OrderSpec;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruncationLevel(u32);

impl TruncationLevel {
    pub fn new(t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::Precondition("truncation level must be at least 1".into()));
        }
        Ok(TruncationLevel(t))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Ordered monomial basis of `R/m^T`.
#[derive(Clone, Debug)]
pub struct ColumnBasis {
    nvars: usize,
    trunc: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

impl ColumnBasis {
    /// Ascending total degree.
    pub fn graded(nvars: usize, trunc: u32) -> Self {
        Self::from_monomials(nvars, trunc, monomials_below(nvars, trunc))
    }

    /// Ascending under `ord`, so echelon pivots are least terms.
    pub fn sorted_by(ord: &OrderSpec, trunc: u32) -> Self {
        let mut ms = monomials_below(ord.nvars(), trunc);
        ms.sort_by(|a, b| ord.cmp(a, b));
        Self::from_monomials(ord.nvars(), trunc, ms)
    }

    fn from_monomials(nvars: usize, trunc: u32, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        ColumnBasis {
            nvars,
            trunc,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, col: u32) -> &Monomial {
        &self.monomials[col as usize]
    }

    pub fn column(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Coordinates of `f mod m^T`.
    pub fn row_of(&self, f: &Polynomial) -> SparseRow {
        let mut row: SparseRow = f
            .terms()
            .iter()
            .filter(|(m, _)| m.degree() < self.trunc)
            .map(|(m, c)| (self.index[m], *c))
            .collect();
        row.sort_unstable_by_key(|e| e.0);
        row
    }

    fn product_row(&self, u: &Monomial, f: &Polynomial) -> SparseRow {
        let room = self.trunc - u.degree();
        let mut row: SparseRow = f
            .terms()
            .iter()
            .filter(|(m, _)| m.degree() < room)
            .map(|(m, c)| (self.index[&m.mul(u)], *c))
            .collect();
        row.sort_unstable_by_key(|e| e.0);
        row
    }

    pub fn poly_of(&self, row: &[(u32, u32)], field: PrimeField) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            field,
            row.iter().map(|&(c, v)| (self.monomials[c as usize].clone(), v)),
        )
    }
}

/// Visits the rows `u*f mod m^T` for every generator `f` and every monomial
/// multiplier `u` with `deg u >= min_mult_degree`.
pub(crate) fn for_each_product<F>(gens: &[Polynomial], basis: &ColumnBasis, min_mult_degree: u32, mut visit: F)
where
    F: FnMut(usize, SparseRow),
{
    let t = basis.trunc;
    let mut by_degree: Vec<Vec<Monomial>> = Vec::new();
    for (j, f) in gens.iter().enumerate() {
        let Some(ord) = f.order_of_vanishing() else {
            continue;
        };
        if ord >= t {
            continue;
        }
        for k in min_mult_degree..t - ord {
            while by_degree.len() <= k as usize {
                let next = by_degree.len() as u32;
                by_degree.push(monomials_of_degree(basis.nvars, next));
            }
            for u in &by_degree[k as usize] {
                let row = basis.product_row(u, f);
                if !row.is_empty() {
                    visit(j, row);
                }
            }
        }
    }
}

fn check_gens(gens: &[Polynomial]) -> Result<(usize, PrimeField)> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("empty generator list".into()))?;
    for g in gens {
        if g.nvars() != first.nvars() {
            return Err(Error::DimensionMismatch {
                expected: first.nvars(),
                got: g.nvars(),
            });
        }
    }
    Ok((first.nvars(), first.field()))
}

/// The subspace `(J + m^T)/m^T` in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct MacaulayImage {
    trunc: TruncationLevel,
    basis: ColumnBasis,
    echelon: Echelon,
}

impl MacaulayImage {
    pub fn trunc(&self) -> TruncationLevel {
        self.trunc
    }

    pub fn basis(&self) -> &ColumnBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Leading (pivot) monomials of the reduced rows.
    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.echelon.rows().iter().map(|r| self.basis.monomial(r[0].0))
    }

    /// The reduced rows as polynomials, in pivot order.
    pub fn elements(&self) -> Vec<Polynomial> {
        let field = self.echelon.field();
        self.echelon
            .rows()
            .iter()
            .map(|r| self.basis.poly_of(r, field))
            .collect()
    }

    /// Reduced row with the given pivot monomial.
    pub fn element_with_pivot(&self, m: &Monomial) -> Option<Polynomial> {
        let col = self.basis.column(m)?;
        self.echelon
            .row_with_pivot(col)
            .map(|r| self.basis.poly_of(r, self.echelon.field()))
    }

    fn check_degree(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.basis.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.basis.nvars,
                got: f.nvars(),
            });
        }
        match f.degree() {
            Some(deg) if deg >= self.trunc.0 => Err(Error::DegreeNotBelowTruncation {
                degree: deg,
                trunc: self.trunc.0,
            }),
            _ => Ok(()),
        }
    }

    /// Canonical representative of `f` modulo the image; zero iff `f` lies in it.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_degree(f)?;
        let r = self.echelon.reduce_shared(&self.basis.row_of(f));
        Ok(self.basis.poly_of(&r, self.echelon.field()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

fn build_image(gens: &[Polynomial], basis: ColumnBasis, trunc: TruncationLevel, field: PrimeField) -> MacaulayImage {
    let mut ech = Echelon::new(field, basis.len());
    for_each_product(gens, &basis, 0, |_, row| {
        ech.insert(&row);
    });
    MacaulayImage {
        trunc,
        basis,
        echelon: ech.into_reduced(),
    }
}

/// `(ideal(gens) + m^T)/m^T` over the graded monomial basis.
pub fn ideal_image(gens: &[Polynomial], trunc: TruncationLevel) -> Result<MacaulayImage> {
    let (nvars, field) = check_gens(gens)?;
    let basis = ColumnBasis::graded(nvars, trunc.0);
    Ok(build_image(gens, basis, trunc, field))
}

/// Same subspace, with columns ascending under a local order so that pivots
/// are leading terms.
pub fn ideal_image_ordered(gens: &[Polynomial], ord: &OrderSpec, trunc: TruncationLevel) -> Result<MacaulayImage> {
    let (nvars, field) = check_gens(gens)?;
    if nvars != ord.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ord.nvars(),
            got: nvars,
        });
    }
    if !ord.is_local() {
        return Err(Error::WrongOrderKind(ord.to_string()));
    }
    let basis = ColumnBasis::sorted_by(ord, trunc.0);
    Ok(build_image(gens, basis, trunc, field))
}

/// `dim (J + m^T)/(mJ + m^T)`.
///
/// One elimination: the rows spanning `mJ` go in first, then each generator
/// is tested for whether it raises the rank.
pub fn mu_at_level(gens: &[Polynomial], trunc: TruncationLevel) -> Result<usize> {
    let (nvars, field) = check_gens(gens)?;
    let basis = ColumnBasis::graded(nvars, trunc.0);
    let mut ech = Echelon::new(field, basis.len());
    for_each_product(gens, &basis, 1, |_, row| {
        ech.insert(&row);
    });
    let mut mu = 0;
    for f in gens {
        if ech.insert(&basis.row_of(f)).is_some() {
            mu += 1;
        }
    }
    Ok(mu)
}

/// `mu((J + m^n)/m^n)`.
pub fn mu_mod_n(gens: &[Polynomial], n: u32) -> Result<usize> {
    mu_at_level(gens, TruncationLevel::new(n)?)
}

/// `dim image(J) - dim image({x_i f_j})` at level `n`, computed with two
/// separate eliminations. Slower than [`mu_mod_n`]; kept as a cross-check.
pub fn mu_mod_n_by_difference(gens: &[Polynomial], n: u32) -> Result<usize> {
    let (nvars, _) = check_gens(gens)?;
    let t = TruncationLevel::new(n)?;
    let products: Vec<Polynomial> = gens
        .iter()
        .flat_map(|f| (0..nvars).map(move |i| f.mul_term(&Monomial::variable(nvars, i), 1)))
        .collect();
    let whole = ideal_image(gens, t)?.dim();
    let inner = ideal_image(&products, t)?.dim();
    Ok(whole - inner)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizationPolicy {
    /// First level is `max generator degree + initial_offset`.
    pub initial_offset: u32,
    /// Number of consecutive equal values required.
    pub window: u32,
    /// Last level tried is `max generator degree + max_offset`.
    pub max_offset: u32,
}

impl Default for StabilizationPolicy {
    fn default() -> Self {
        StabilizationPolicy {
            initial_offset: 2,
            window: 2,
            max_offset: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizedMu {
    pub mu: usize,
    pub t_used: u32,
    pub stable: bool,
}

/// Minimal number of generators of `J`, read off the truncations once the
/// count is constant over `window` consecutive levels.
pub fn mu_stabilized(gens: &[Polynomial], policy: StabilizationPolicy) -> Result<StabilizedMu> {
    check_gens(gens)?;
    if policy.initial_offset < 2 || policy.window < 2 || policy.max_offset < policy.initial_offset {
        return Err(Error::Precondition(format!("invalid stabilization policy {policy:?}")));
    }
    let maxdeg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let mut last = None;
    let mut run = 0;
    let mut result = StabilizedMu {
        mu: 0,
        t_used: 0,
        stable: false,
    };
    for t in maxdeg + policy.initial_offset..=maxdeg + policy.max_offset {
        let mu = mu_at_level(gens, TruncationLevel::new(t)?)?;
        if last == Some(mu) {
            run += 1;
        } else {
            run = 1;
        }
        last = Some(mu);
        result = StabilizedMu {
            mu,
            t_used: t,
            stable: false,
        };
        if run >= policy.window {
            result.stable = true;
            return Ok(result);
        }
    }
    Ok(result)
}

/// Echelon of the image at level `n` over the graded basis. Rows whose pivot
/// has degree `n - 1` are exactly the image elements supported in that degree.
fn socle_rows(gens: &[Polynomial], n: u32) -> Result<(ColumnBasis, Echelon)> {
    let (nvars, field) = check_gens(gens)?;
    let basis = ColumnBasis::graded(nvars, n);
    let mut ech = Echelon::new(field, basis.len());
    for_each_product(gens, &basis, 0, |_, row| {
        ech.insert(&row);
    });
    Ok((basis, ech))
}

/// `dim (J ∩ m^{n-1} + m^n)/m^n`.
pub fn lambda_socle(gens: &[Polynomial], n: u32) -> Result<usize> {
    TruncationLevel::new(n)?;
    let (basis, ech) = socle_rows(gens, n)?;
    Ok(ech
        .rows()
        .iter()
        .filter(|r| basis.monomial(r[0].0).degree() == n - 1)
        .count())
}

/// Basis of the degree-`(n-1)` initial forms of `J ∩ m^{n-1}`.
pub fn phi_basis(gens: &[Polynomial], n: u32) -> Result<Vec<Polynomial>> {
    if n < 2 {
        return Err(Error::Precondition("phi_basis needs n >= 2".into()));
    }
    let (basis, ech) = socle_rows(gens, n)?;
    let field = ech.field();
    let ech = ech.into_reduced();
    Ok(ech
        .rows()
        .iter()
        .filter(|r| basis.monomial(r[0].0).degree() == n - 1)
        .map(|r| basis.poly_of(r, field))
        .collect())
}

/// True iff every target lies in the image.
pub fn subspace_inclusion(targets: &[Polynomial], img: &MacaulayImage) -> Result<bool> {
    for t in targets {
        if !img.contains(t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For homogeneous generators: does the ideal contain every monomial of
/// degree `s`? Only the degree-`s` slice is assembled.
pub fn contains_maximal_power(gens: &[Polynomial], s: u32) -> Result<bool> {
    let (nvars, field) = check_gens(gens)?;
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Precondition("generators must be homogeneous".into()));
    }
    let cols = monomials_of_degree(nvars, s);
    let index: HashMap<&Monomial, u32> = cols.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
    let mut ech = Echelon::new(field, cols.len());
    for f in gens {
        let Some(deg) = f.degree() else { continue };
        if deg > s {
            continue;
        }
        for u in monomials_of_degree(nvars, s - deg) {
            let mut row: SparseRow = f
                .terms()
                .iter()
                .map(|(m, c)| (index[&m.mul(&u)], *c))
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            ech.insert(&row);
            if ech.rank() == cols.len() {
                return Ok(true);
            }
        }
    }
    Ok(ech.rank() == cols.len())
}

/// Generators of `m^k`.
pub fn maximal_power_generators(nvars: usize, field: PrimeField, k: u32) -> Vec<Polynomial> {
    monomials_of_degree(nvars, k)
        .into_iter()
        .map(|m| Polynomial::term(m, 1, field))
        .collect()
}
