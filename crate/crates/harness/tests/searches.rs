use harness::evaluate::{
    accepts_reduction_parameter, find_compliant_parameters, find_reduction_parameter, quotient_by_linear_form,
    quotient_mu_preserved,
};
use stdbasis::families::{dimension_example, gen_pfaffian, DEFAULT_RETRY_BUDGET};
use stdbasis::groebner::phi_height;
use stdbasis::trunc::{mu_mod_n, StabilizationPolicy};
use stdbasis::PrimeField;

fn field() -> PrimeField {
    PrimeField::default()
}

#[test]
fn pfaffian_reduction_parameter() {
    let spec = gen_pfaffian(4, 2, 1, 31, field(), DEFAULT_RETRY_BUDGET).unwrap();
    let search = find_reduction_parameter(&spec, 3, 20, 5).unwrap();
    assert!(search.hypotheses_met);
    let z = search.found.expect("a generic linear form is accepted");
    // recompute both conditions on the quotient independently of the search
    let q = quotient_by_linear_form(&spec.generators, &z).unwrap();
    assert!(mu_mod_n(&q, 3).unwrap() >= 3);
    assert!(phi_height(&q, 3).unwrap() >= 2);
    assert!(accepts_reduction_parameter(&spec, 3, &z).unwrap());
    assert!(quotient_mu_preserved(&spec, &z, StabilizationPolicy::default()).unwrap());
}

#[test]
fn example_has_no_reduction_parameter() {
    let spec = dimension_example(3, field()).unwrap();
    let search = find_reduction_parameter(&spec, 3, 10, 1).unwrap();
    assert!(!search.hypotheses_met);
    assert!(search.found.is_none());
}

#[test]
fn compliant_parameters_for_pfaffians() {
    let spec = gen_pfaffian(4, 2, 1, 3, field(), DEFAULT_RETRY_BUDGET).unwrap();
    assert!(find_compliant_parameters(&spec, 3, 5, 9).unwrap().is_some());
    let ex = dimension_example(3, field()).unwrap();
    assert!(find_compliant_parameters(&ex, 3, 3, 0).unwrap().is_none());
}
