//! Quick end-to-end checks behind the `selftest` subcommand.

use stdbasis::families::{gen_hilbert_burch, gen_pfaffian, verify_example};
use stdbasis::trunc::{maximal_power_generators, mu_mod_n, mu_stabilized};
use stdbasis::{parse_poly, OrderSpec, PrimeField};

use crate::bounds::BoundSet;
use crate::config::Config;

fn check(name: &str, f: impl FnOnce() -> stdbasis::Result<bool>) -> (String, bool) {
    (name.to_string(), f().unwrap_or(false))
}

/// Named checks with their outcomes.
pub fn run_selftest(config: &Config) -> Vec<(String, bool)> {
    let field = config.field();
    let policy = config.policy();
    let budget = config.retry_budget;
    vec![
        check("parse and print round trip", || {
            let p7 = PrimeField::new(7)?;
            let f = parse_poly("x1^2 + 2*x2", 2, p7)?;
            Ok(parse_poly(&f.to_string(), 2, p7)? == f && parse_poly("7*x1", 1, p7)?.is_zero())
        }),
        check("local leading term", || {
            let f = parse_poly("x3^4 + x1^3*x2^2", 3, field)?;
            let (m, _) = OrderSpec::block(3, 3)?.leading_term(&f)?;
            Ok(m == parse_poly("x3^4", 3, field)?.terms()[0].0)
        }),
        check("bounds at g=3, n=3..5", || {
            Ok([3, 4, 5].map(|n| BoundSet::new(3, n).e1_bound) == [6, 10, 15])
        }),
        check("mu of m^2 modulo m^3 in 3 variables", || {
            Ok(mu_mod_n(&maximal_power_generators(3, field, 2), 3)? == 6)
        }),
        check("Hilbert-Burch d=3 t=2 has 3 generators", || {
            let spec = gen_hilbert_burch(3, 2, 1, 1, field, budget)?;
            Ok(mu_stabilized(&spec.generators, policy)?.mu == 3)
        }),
        check("Pfaffian d=3 k=2 has 5 generators", || {
            let spec = gen_pfaffian(3, 2, 1, 1, field, budget)?;
            let mu = mu_stabilized(&spec.generators, policy)?;
            Ok(mu.stable && mu.mu == 5)
        }),
        check("dimension-dependent example N=3", || Ok(verify_example(3, field, policy)?.passed())),
    ]
}
