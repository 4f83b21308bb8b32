mod common;

use common::{field, nonzero_poly, poly, vanishing_poly};
use proptest::prelude::*;
use stdbasis::families::complete_intersection;
use stdbasis::groebner::{colon_ideal, height, reduced_groebner, GroebnerBasis};
use stdbasis::{OrderSpec, Polynomial};

fn ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(vanishing_poly(3, 3, 3), 1..=3)
}

fn s_polynomial(ord: &OrderSpec, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fld = f.field();
    let (mf, cf) = ord.leading_term(f).unwrap();
    let (mg, cg) = ord.leading_term(g).unwrap();
    let l = mf.lcm(&mg);
    let a = f.mul_term(&l.div(&mf).unwrap(), fld.inv(cf));
    let b = g.mul_term(&l.div(&mg).unwrap(), fld.inv(cg));
    &a - &b
}

fn gb(gens: &[Polynomial]) -> GroebnerBasis {
    reduced_groebner(gens, &OrderSpec::degrevlex(3)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn presentation_independent(gens in ideal(), mix in prop::collection::vec(1u32..32003, 9)) {
        let k = gens.len();
        let mixed: Vec<Polynomial> = (0..k)
            .map(|i| {
                (0..k).fold(Polynomial::zero(3, field()), |acc, j| {
                    // unit lower-triangular mixing is always invertible
                    let c = if j == i { 1 } else if j < i { mix[i * 3 + j] } else { 0 };
                    acc.add_scaled(&gens[j], c)
                })
            })
            .collect();
        let (a, b) = (gb(&gens), gb(&mixed));
        prop_assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn absorbs_multiples(gens in ideal(), f in poly(3, 2, 3), i in 0usize..3) {
        let basis = gb(&gens);
        let g = &gens[i % gens.len()];
        prop_assert!(basis.normal_form(&(&f * g)).unwrap().is_zero());
    }

    #[test]
    fn s_pairs_reduce(gens in ideal()) {
        let basis = gb(&gens);
        prop_assert!(!basis.is_unit());
        let els = basis.elements();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                let s = s_polynomial(basis.order(), &els[i], &els[j]);
                prop_assert!(basis.normal_form(&s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn colon_times_element_in_ideal(gens in prop::collection::vec(vanishing_poly(3, 2, 3), 1..=2), f in nonzero_poly(3, 2, 2)) {
        let basis = gb(&gens);
        let colon = colon_ideal(&gens, &f).unwrap();
        for h in colon.elements() {
            prop_assert!(basis.normal_form(&(&f * h)).unwrap().is_zero());
        }
    }

    #[test]
    fn complete_intersections_have_height_three(d in 3usize..=5, a in 1u16..=4, b in 1u16..=4, c in 1u16..=4) {
        let spec = complete_intersection(d, &[a, b, c], field()).unwrap();
        prop_assert_eq!(height(&spec.generators, d).unwrap(), Some(3));
    }
}
