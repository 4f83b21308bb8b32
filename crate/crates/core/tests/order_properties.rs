mod common;

use common::{any_order, field, local_order, monomial, nonzero_poly};
use proptest::prelude::*;
use stdbasis::{Monomial, OrderSpec};

fn order_and_monomials(n: usize) -> impl Strategy<Value = (OrderSpec, Vec<Monomial>)> {
    (1usize..=5).prop_flat_map(move |d| (any_order(d), prop::collection::vec(monomial(d, 5), n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn admissible((ord, ms) in order_and_monomials(3)) {
        let (s, a, b) = (&ms[0], &ms[1], &ms[2]);
        let one = Monomial::one(ord.nvars());
        prop_assert!(ord.cmp(&one, a).is_le());
        prop_assert_eq!(ord.cmp(a, b), ord.cmp(&s.mul(a), &s.mul(b)));
    }

    #[test]
    fn total_and_transitive((ord, ms) in order_and_monomials(3)) {
        let (a, b, c) = (&ms[0], &ms[1], &ms[2]);
        prop_assert_eq!(ord.cmp(a, b), ord.cmp(b, a).reverse());
        prop_assert_eq!(ord.cmp(a, b).is_eq(), a == b);
        if ord.cmp(a, b).is_le() && ord.cmp(b, c).is_le() {
            prop_assert!(ord.cmp(a, c).is_le());
        }
    }
}

proptest! {
    #[test]
    fn leading_terms_multiply(ord in local_order(3), f in nonzero_poly(3, 4, 5), g in nonzero_poly(3, 4, 5)) {
        let (mf, cf) = ord.leading_term(&f).unwrap();
        let (mg, cg) = ord.leading_term(&g).unwrap();
        let (m, c) = ord.leading_term(&(&f * &g)).unwrap();
        prop_assert_eq!(m, mf.mul(&mg));
        prop_assert_eq!(c, field().mul(cf, cg));
    }

    #[test]
    fn full_block_order_refines_degree(d in 1usize..=4, a in monomial(4, 6), b in monomial(4, 6)) {
        let ord = OrderSpec::block(d, d).unwrap();
        let (a, b) = (Monomial::from_exponents(&a.exponents()[..d]), Monomial::from_exponents(&b.exponents()[..d]));
        if a.degree() < b.degree() {
            prop_assert!(ord.cmp(&a, &b).is_lt());
        }
    }
}
