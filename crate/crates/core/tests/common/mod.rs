#![allow(dead_code)]

use proptest::prelude::*;
use stdbasis::{Monomial, OrderSpec, Polynomial, PrimeField};

pub fn field() -> PrimeField {
    PrimeField::default()
}

pub fn monomial(d: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, d).prop_map(|e| Monomial::from_exponents(&e))
}

/// Polynomials in `d` variables with up to `max_terms` terms of degree <= `max_deg`.
pub fn poly(d: usize, max_deg: u16, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (0..=max_deg, prop::collection::vec(0..d, max_deg as usize), 1..field().modulus());
    prop::collection::vec(term, 0..=max_terms).prop_map(move |ts| {
        let ts = ts.into_iter().map(|(deg, vars, c)| {
            let mut m = Monomial::one(d);
            for &v in &vars[..deg as usize] {
                m.set_exponent(v, m.exponent(v) + 1);
            }
            (m, c)
        });
        Polynomial::from_terms(d, field(), ts)
    })
}

pub fn nonzero_poly(d: usize, max_deg: u16, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(d, max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// Any local order on `d` variables.
pub fn local_order(d: usize) -> impl Strategy<Value = OrderSpec> {
    (0..=d).prop_map(move |g| if g == 0 { OrderSpec::lex(d) } else { OrderSpec::block(g, d).unwrap() })
}

pub fn any_order(d: usize) -> impl Strategy<Value = OrderSpec> {
    prop_oneof![local_order(d), Just(OrderSpec::degrevlex(d))]
}

/// Nonzero polynomials without constant term, so the ideals they generate are proper.
pub fn vanishing_poly(d: usize, max_deg: u16, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(d, max_deg, max_terms)
        .prop_map(|p| p.truncate(p.degree().map_or(0, |t| t + 1)).add_scaled(&p.homogeneous_component(0), field().neg(1)))
        .prop_filter("nonzero", |p| !p.is_zero())
}
