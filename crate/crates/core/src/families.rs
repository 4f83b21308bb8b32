//! Test ideals with known structure.
//!
//! Random instances are deterministic functions of their parameters and a
//! seed. A draw with the wrong height is discarded and redrawn from a derived
//! seed, up to a retry budget.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{height, is_regular_element, phi_height, Regularity};
use crate::matrix::{PolyMatrix, ScalarMatrix};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::trunc::{mu_mod_n, mu_stabilized, StabilizationPolicy, StabilizedMu};

pub const DEFAULT_RETRY_BUDGET: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    HilbertBurch,
    Pfaffian,
    MPrimary,
    CompleteIntersection,
    DimensionExample,
    /// The example with `x4^2` added, aimed at height four. Not certified perfect.
    DimensionExampleG4,
    User,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::HilbertBurch => "hilbert_burch",
            Family::Pfaffian => "pfaffian",
            Family::MPrimary => "m_primary",
            Family::CompleteIntersection => "complete_intersection",
            Family::DimensionExample => "dimension_example",
            Family::DimensionExampleG4 => "dimension_example_g4",
            Family::User => "user",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub nvars: usize,
    pub field: PrimeField,
    pub generators: Vec<Polynomial>,
    pub family: Family,
    pub params: BTreeMap<String, u64>,
    pub expected_grade: Option<usize>,
    pub homogeneous: bool,
    /// Perfectness follows from the construction.
    pub certified: bool,
    pub seed: u64,
    /// Draws consumed, including the accepted one.
    pub attempts: u32,
}

impl IdealSpec {
    /// Wraps user-supplied generators.
    pub fn user(nvars: usize, field: PrimeField, generators: Vec<Polynomial>) -> Self {
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        IdealSpec {
            nvars,
            field,
            generators,
            family: Family::User,
            params: BTreeMap::new(),
            expected_grade: None,
            homogeneous,
            certified: false,
            seed: 0,
            attempts: 0,
        }
    }

    /// Least order of vanishing of a generator, i.e. the largest `s` with `J ⊆ m^s`.
    pub fn order(&self) -> Option<u32> {
        self.generators.iter().filter_map(|g| g.order_of_vanishing()).min()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }
}

/// Seed for retry number `attempt`.
pub fn derive_seed(seed: u64, attempt: u32) -> u64 {
    seed ^ (attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Homogeneous form of the given degree with uniformly random coefficients.
pub fn random_form<R: Rng>(rng: &mut R, nvars: usize, degree: u32, field: PrimeField) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        field,
        monomials_of_degree(nvars, degree)
            .into_iter()
            .map(|m| (m, rng.gen_range(0..field.modulus()))),
    )
}

/// Uniformly random invertible matrix (rejection sampling).
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, field: PrimeField) -> ScalarMatrix {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..field.modulus())).collect())
            .collect();
        let m = ScalarMatrix::from_rows(field, rows).expect("square rows");
        if m.rank() == n {
            return m;
        }
    }
}

fn retry<F>(budget: u32, seed: u64, mut draw: F) -> Result<(Vec<Polynomial>, u32)>
where
    F: FnMut(&mut ChaCha8Rng) -> Result<Option<Vec<Polynomial>>>,
{
    for attempt in 0..budget {
        let mut rng = rng_for(derive_seed(seed, attempt));
        if let Some(gens) = draw(&mut rng)? {
            return Ok((gens, attempt + 1));
        }
    }
    Err(Error::RetryBudgetExhausted(budget))
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Maximal minors of a random `(t+1) x t` matrix of forms of degree `entry_degree`.
pub fn gen_hilbert_burch(d: usize, t: usize, entry_degree: u32, seed: u64, field: PrimeField, budget: u32) -> Result<IdealSpec> {
    if d < 2 || t < 1 || entry_degree < 1 {
        return Err(Error::Precondition("hilbert-burch needs d >= 2, t >= 1, deg >= 1".into()));
    }
    let (generators, attempts) = retry(budget, seed, |rng| {
        let rows = (0..t + 1)
            .map(|_| (0..t).map(|_| random_form(rng, d, entry_degree, field)).collect())
            .collect();
        let minors = PolyMatrix::from_rows(rows)?.maximal_minors()?;
        if minors.iter().any(|m| m.is_zero()) {
            return Ok(None);
        }
        Ok((height(&minors, d)? == Some(2)).then_some(minors))
    })?;
    Ok(IdealSpec {
        nvars: d,
        field,
        generators,
        family: Family::HilbertBurch,
        params: params(&[("t", t as u64), ("deg", entry_degree as u64)]),
        expected_grade: Some(2),
        homogeneous: true,
        certified: true,
        seed,
        attempts,
    })
}

/// Sub-Pfaffians of a random `(2k+1) x (2k+1)` skew matrix of forms.
pub fn gen_pfaffian(d: usize, k: usize, entry_degree: u32, seed: u64, field: PrimeField, budget: u32) -> Result<IdealSpec> {
    if d < 3 || k < 1 || entry_degree < 1 {
        return Err(Error::Precondition("pfaffian needs d >= 3, k >= 1, deg >= 1".into()));
    }
    let n = 2 * k + 1;
    let zero = Polynomial::zero(d, field);
    let (generators, attempts) = retry(budget, seed, |rng| {
        let upper: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (i + 1..n).map(|_| random_form(rng, d, entry_degree, field)).collect())
            .collect();
        let pf = PolyMatrix::skew_from_upper(n, &upper, &zero)?.sub_pfaffians()?;
        if pf.iter().any(|p| p.is_zero()) {
            return Ok(None);
        }
        Ok((height(&pf, d)? == Some(3)).then_some(pf))
    })?;
    Ok(IdealSpec {
        nvars: d,
        field,
        generators,
        family: Family::Pfaffian,
        params: params(&[("k", k as u64), ("deg", entry_degree as u64)]),
        expected_grade: Some(3),
        homogeneous: true,
        certified: true,
        seed,
        attempts,
    })
}

/// `count` random forms: the first `d` of degree `n - 1`, the others of degree
/// `n - 1` or `n`; redrawn until the ideal is `m`-primary.
pub fn gen_mprimary(d: usize, n: u32, count: usize, seed: u64, field: PrimeField, budget: u32) -> Result<IdealSpec> {
    if d < 1 || n < 2 || count < d {
        return Err(Error::Precondition("m-primary needs d >= 1, n >= 2, count >= d".into()));
    }
    let (generators, attempts) = retry(budget, seed, |rng| {
        let gens: Vec<Polynomial> = (0..count)
            .map(|i| {
                let deg = if i < d { n - 1 } else { n - 1 + rng.gen_range(0..2) };
                random_form(rng, d, deg, field)
            })
            .collect();
        if gens.iter().any(|g| g.is_zero()) {
            return Ok(None);
        }
        Ok((height(&gens, d)? == Some(d)).then_some(gens))
    })?;
    Ok(IdealSpec {
        nvars: d,
        field,
        generators,
        family: Family::MPrimary,
        params: params(&[("n", n as u64), ("count", count as u64)]),
        expected_grade: Some(d),
        homogeneous: true,
        certified: true,
        seed,
        attempts,
    })
}

/// Pure powers `x_i^{e_i}` for `i <= exps.len()`.
pub fn complete_intersection(d: usize, exps: &[u16], field: PrimeField) -> Result<IdealSpec> {
    if exps.is_empty() || exps.len() > d || exps.contains(&0) {
        return Err(Error::Precondition("complete intersection needs 1..=d positive exponents".into()));
    }
    let generators = exps
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut m = Monomial::one(d);
            m.set_exponent(i, e);
            Polynomial::term(m, 1, field)
        })
        .collect();
    Ok(IdealSpec {
        nvars: d,
        field,
        generators,
        family: Family::CompleteIntersection,
        params: exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (format!("e{}", i + 1), e as u64))
            .collect(),
        expected_grade: Some(exps.len()),
        homogeneous: true,
        certified: true,
        seed: 0,
        attempts: 0,
    })
}

fn dimension_example_generators(big_n: usize, nvars: usize, y_start: usize, field: PrimeField) -> Vec<Polynomial> {
    let mono = |pairs: &[(usize, u16)]| {
        let mut m = Monomial::one(nvars);
        for &(v, e) in pairs {
            m.set_exponent(v, m.exponent(v) + e);
        }
        m
    };
    let mut gens = vec![
        Polynomial::term(mono(&[(0, 2)]), 1, field),
        Polynomial::term(mono(&[(0, 1), (1, 1)]), 1, field),
        Polynomial::term(mono(&[(0, 1), (2, 1)]), 1, field),
    ];
    for j in 0..=big_n {
        let a = (big_n - j) as u16;
        let b = j as u16;
        gens.push(Polynomial::from_terms(
            nvars,
            field,
            [
                (mono(&[(0, 1), (y_start + j, 1)]), 1),
                (mono(&[(1, a), (2, b)]), 1),
            ],
        ));
    }
    gens
}

/// `(x1^2, x1 x2, x1 x3, x1 y_j + x2^{N-j} x3^j for j = 0..N)` with `y_j = x_{4+j}`.
pub fn dimension_example(big_n: usize, field: PrimeField) -> Result<IdealSpec> {
    if big_n < 3 {
        return Err(Error::Precondition("the example needs N >= 3".into()));
    }
    let nvars = big_n + 4;
    Ok(IdealSpec {
        nvars,
        field,
        generators: dimension_example_generators(big_n, nvars, 3, field),
        family: Family::DimensionExample,
        params: params(&[("N", big_n as u64)]),
        expected_grade: Some(3),
        homogeneous: false,
        certified: true,
        seed: 0,
        attempts: 0,
    })
}

/// The example with a fourth variable `x4` and the extra generator `x4^2`;
/// here `y_j = x_{5+j}`.
pub fn dimension_example_g4(big_n: usize, field: PrimeField) -> Result<IdealSpec> {
    if big_n < 3 {
        return Err(Error::Precondition("the example needs N >= 3".into()));
    }
    let nvars = big_n + 5;
    let mut generators = dimension_example_generators(big_n, nvars, 4, field);
    let mut m = Monomial::one(nvars);
    m.set_exponent(3, 2);
    generators.push(Polynomial::term(m, 1, field));
    Ok(IdealSpec {
        nvars,
        field,
        generators,
        family: Family::DimensionExampleG4,
        params: params(&[("N", big_n as u64)]),
        expected_grade: Some(4),
        homogeneous: false,
        certified: false,
        seed: 0,
        attempts: 0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleReport {
    pub big_n: usize,
    pub height: Option<usize>,
    pub mu_3: usize,
    pub mu: StabilizedMu,
    /// Outcome of `y_i` on `R/(I + (y_0..y_{i-1}))`, in order.
    pub regular_steps: Vec<Regularity>,
    pub phi_height: usize,
}

impl ExampleReport {
    pub fn regular_sequence(&self) -> bool {
        self.regular_steps.iter().all(|r| *r == Regularity::Regular)
    }

    /// Named sub-checks with their outcomes.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let expected = self.big_n + 4;
        vec![
            ("height = 3", self.height == Some(3)),
            ("mu(I + m^3/m^3) = N+4", self.mu_3 == expected),
            ("mu(I) = N+4", self.mu.stable && self.mu.mu == expected),
            ("y0..yN regular on R/I", self.regular_sequence()),
            ("phi-height = 1", self.phi_height == 1),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.1)
    }
}

pub fn verify_example(big_n: usize, field: PrimeField, policy: StabilizationPolicy) -> Result<ExampleReport> {
    let spec = dimension_example(big_n, field)?;
    let d = spec.nvars;
    let gens = &spec.generators;
    let mut current = gens.clone();
    let mut regular_steps = Vec::with_capacity(big_n + 1);
    for j in 0..=big_n {
        let y = Polynomial::variable(d, field, 3 + j);
        regular_steps.push(is_regular_element(&y, &current)?);
        current.push(y);
    }
    Ok(ExampleReport {
        big_n,
        height: height(gens, d)?,
        mu_3: mu_mod_n(gens, 3)?,
        mu: mu_stabilized(gens, policy)?,
        regular_steps,
        phi_height: phi_height(gens, 3)?,
    })
}
