//! Acceptance suite. Runs as a plain binary so each criterion prints one
//! PASS/FAIL line; exits non-zero if any criterion fails.

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use harness::evaluate::check_forms_contain_power;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stdbasis::families::{
    gen_hilbert_burch, gen_mprimary, gen_pfaffian, random_form, verify_example, IdealSpec, DEFAULT_RETRY_BUDGET,
};
use stdbasis::local::{hironaka_divide, superfluous_filter};
use stdbasis::monomial::binomial;
use stdbasis::trunc::{lambda_socle, mu_mod_n, mu_stabilized, StabilizationPolicy, TruncationLevel};
use stdbasis::groebner::phi_height;
use stdbasis::{parse_poly, Monomial, OrderSpec, Polynomial, PrimeField};

/// Every criterion is an exact count; the required pass fraction is 1.
const REQUIRED_PASS_RATE: f64 = 1.0;
const LIMIT_C1: Duration = Duration::from_secs(120);
const LIMIT_C2: Duration = Duration::from_secs(600);
const LIMIT_C3: Duration = Duration::from_secs(180);
const MASTER_SEED: u64 = 0x5EED_2026;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn field() -> PrimeField {
    PrimeField::default()
}

fn policy() -> StabilizationPolicy {
    StabilizationPolicy::default()
}

fn rate(good: usize, total: usize) -> f64 {
    if total == 0 {
        0.0
    } else {
        good as f64 / total as f64
    }
}

fn example(ns: &[usize], limit: Duration) -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for &n in ns {
        let r = verify_example(n, field(), policy()).expect("example evaluates");
        let expected = n + 4;
        let good = r.height == Some(3)
            && r.mu.stable
            && r.mu.mu == expected
            && r.mu_3 == expected
            && r.phi_height == 1
            && r.regular_sequence();
        ok &= good;
        detail.push(format!(
            "N={n}: height={:?} mu={} mu_3={} phi_height={} regular={}",
            r.height,
            r.mu.mu,
            r.mu_3,
            r.phi_height,
            r.regular_sequence()
        ));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < limit;
    Outcome {
        ok,
        detail: format!("{} in {:.1?}", detail.join("; "), elapsed),
    }
}

fn c3_hilbert_burch() -> Outcome {
    let start = Instant::now();
    let (mut stable, mut good, mut total) = (0, 0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 3);
    for d in [3, 4] {
        for t in [2, 3] {
            for _ in 0..50 {
                total += 1;
                let spec = gen_hilbert_burch(d, t, 1, rng.gen(), field(), DEFAULT_RETRY_BUDGET).unwrap();
                let n = spec.order().unwrap() + 1;
                let mu = mu_stabilized(&spec.generators, policy()).unwrap();
                if mu.stable {
                    stable += 1;
                    good += usize::from(mu.mu as u32 <= n);
                }
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        ok: total == 200 && rate(good, stable) >= REQUIRED_PASS_RATE && elapsed < LIMIT_C3,
        detail: format!("{good}/{stable} stable of {total} satisfy mu <= n, {elapsed:.1?}"),
    }
}

fn c4_m_primary() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 4);
    let (mut good, mut total) = (0, 0);
    for d in [2usize, 3, 4] {
        for n in [3u32, 4, 5] {
            for _ in 0..100 {
                total += 1;
                let gens = rng.gen_range(d..=d + 2);
                let spec = gen_mprimary(d, n, gens, rng.gen(), field(), DEFAULT_RETRY_BUDGET).unwrap();
                let g = d as u64;
                let bound = binomial(g + n as u64 - 2, g - 1);
                good += usize::from(mu_mod_n(&spec.generators, n).unwrap() as u64 <= bound);
            }
        }
    }
    Outcome {
        ok: total == 900 && rate(good, total) >= REQUIRED_PASS_RATE,
        detail: format!("{good}/{total} satisfy mu_n <= C(g+n-2, g-1)"),
    }
}

fn mixed_instance(rng: &mut ChaCha8Rng) -> IdealSpec {
    let seed = rng.gen();
    let f = field();
    match rng.gen_range(0..3) {
        0 => gen_hilbert_burch(rng.gen_range(2..=4), rng.gen_range(1..=3), 1, seed, f, DEFAULT_RETRY_BUDGET).unwrap(),
        1 => gen_pfaffian(rng.gen_range(3..=4), rng.gen_range(1..=2), 1, seed, f, DEFAULT_RETRY_BUDGET).unwrap(),
        _ => {
            let d = rng.gen_range(2..=3);
            gen_mprimary(d, rng.gen_range(3..=4), d + 1, seed, f, DEFAULT_RETRY_BUDGET).unwrap()
        }
    }
}

fn c5_socle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 5);
    let mut good = 0;
    for _ in 0..300 {
        let spec = mixed_instance(&mut rng);
        let n = rng.gen_range(2..=spec.order().unwrap() + 2);
        let lambda = lambda_socle(&spec.generators, n).unwrap();
        good += usize::from(lambda >= mu_mod_n(&spec.generators, n).unwrap());
    }
    Outcome {
        ok: rate(good, 300) >= REQUIRED_PASS_RATE,
        detail: format!("{good}/300 satisfy lambda_socle >= mu_n"),
    }
}

fn c6_combinatorics() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 6);
    let (mut good, mut total) = (0, 0);
    for d in [2usize, 3] {
        for n in [3u32, 4] {
            let mut done = 0;
            while done < 50 {
                let forms: Vec<Polynomial> = (0..d).map(|_| random_form(&mut rng, d, n - 1, field())).collect();
                // a degenerate draw fails the height precondition and is redrawn
                let Ok(c) = check_forms_contain_power(&forms, d, n) else { continue };
                done += 1;
                total += 1;
                good += usize::from(c.holds());
            }
            let powers: Vec<Polynomial> = (0..d)
                .map(|i| Polynomial::variable(d, field(), i).pow(n - 1))
                .collect();
            total += 1;
            good += usize::from(check_forms_contain_power(&powers, d, n).unwrap().holds());
        }
    }
    Outcome {
        ok: total == 204 && rate(good, total) >= REQUIRED_PASS_RATE,
        detail: format!("{good}/{total} systems (including x_i^(n-1)) contain the power of m"),
    }
}

fn c7_pfaffian() -> Outcome {
    // (k, entry degree): order of vanishing k*deg, so n = k*deg + 1
    let shapes: [(usize, u32); 5] = [(1, 2), (2, 1), (3, 1), (1, 3), (2, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 7);
    let (mut good, mut eligible, mut total) = (0, 0, 0);
    let (mut sharp_ok, mut e2_hyp, mut e2_ok) = (0, 0, 0);
    for d in [3usize, 4, 5] {
        for (k, deg) in shapes {
            for _ in 0..8 {
                total += 1;
                let spec = gen_pfaffian(d, k, deg, rng.gen(), field(), DEFAULT_RETRY_BUDGET).unwrap();
                let n = spec.order().unwrap() + 1;
                assert!((3..=5).contains(&n));
                let mu = mu_stabilized(&spec.generators, policy()).unwrap();
                if !mu.stable || phi_height(&spec.generators, n).unwrap() < 2 {
                    continue;
                }
                eligible += 1;
                let nn = n as u64;
                good += usize::from(mu.mu as u64 <= binomial(2 * (nn - 1), 2));
                let sharp = harness::bounds::sharp_g3_bound(3, nn).unwrap();
                sharp_ok += usize::from(mu.mu as u64 <= sharp);
                if mu_mod_n(&spec.generators, n).unwrap() as u64 >= binomial(nn, 1) {
                    e2_hyp += 1;
                    e2_ok += usize::from(mu.mu as u64 <= binomial(nn + 1, 2));
                }
            }
        }
    }
    Outcome {
        ok: eligible > 0 && rate(good, eligible) >= REQUIRED_PASS_RATE,
        detail: format!(
            "{good}/{eligible} eligible of {total} satisfy mu <= C(2(n-1),2); sharper bound {sharp_ok}/{eligible}; exploratory e2 {e2_ok}/{e2_hyp}"
        ),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, d: usize, max_deg: u32, terms: RangeInclusive<usize>, min_deg: u32) -> Polynomial {
    let count = rng.gen_range(terms);
    let ts = (0..count).map(|_| {
        let deg = rng.gen_range(min_deg..=max_deg);
        let mut m = Monomial::one(d);
        for _ in 0..deg {
            let v = rng.gen_range(0..d);
            m.set_exponent(v, m.exponent(v) + 1);
        }
        (m, rng.gen_range(1..field().modulus()))
    });
    Polynomial::from_terms(d, field(), ts)
}

fn c8_division() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 8);
    let mut good = 0;
    for _ in 0..1000 {
        let d = rng.gen_range(1..=4);
        let ord = match rng.gen_range(0..2) {
            0 => OrderSpec::lex(d),
            _ => OrderSpec::block(rng.gen_range(1..=d), d).unwrap(),
        };
        let t = rng.gen_range(2..=6);
        let basis: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, d, 4, 1..=3, 1))
            .filter(|g| !g.is_zero())
            .collect();
        if basis.is_empty() {
            good += 1;
            continue;
        }
        let f = random_poly(&mut rng, d, 6, 0..=6, 0);
        let div = hironaka_divide(&f, &basis, &ord, TruncationLevel::new(t).unwrap()).unwrap();
        let mut rebuilt = div.remainder.clone();
        for (q, g) in div.quotients.iter().zip(&basis) {
            rebuilt = &rebuilt + &(q * g);
        }
        let identity = (&f - &rebuilt).truncate(t).is_zero();
        let leads: Vec<Monomial> = basis.iter().map(|g| ord.leading_term(g).unwrap().0).collect();
        let remainder_ok = div
            .remainder
            .terms()
            .iter()
            .all(|(m, _)| m.degree() < t && !leads.iter().any(|l| l.divides(m)));
        good += usize::from(identity && remainder_ok);
    }
    Outcome {
        ok: rate(good, 1000) >= REQUIRED_PASS_RATE,
        detail: format!("{good}/1000 divisions satisfy the identity and remainder condition"),
    }
}

fn c9_mu_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 9);
    let (mut good, mut stable, mut drawn) = (0, 0, 0);
    while stable < 100 && drawn < 1000 {
        drawn += 1;
        let spec = mixed_instance(&mut rng);
        let mu = mu_stabilized(&spec.generators, policy()).unwrap();
        if !mu.stable {
            continue;
        }
        stable += 1;
        let (_, filtered) = superfluous_filter(&spec.generators, TruncationLevel::new(mu.t_used).unwrap()).unwrap();
        good += usize::from(filtered == mu.mu);
    }
    Outcome {
        ok: stable == 100 && rate(good, stable) >= REQUIRED_PASS_RATE,
        detail: format!("{good}/{stable} stable instances agree ({drawn} drawn)"),
    }
}

fn c10_orders() -> Outcome {
    let f = field();
    let mono = |s: &str, d: usize| parse_poly(s, d, f).unwrap().terms()[0].0.clone();
    let p2 = OrderSpec::block(2, 3).unwrap();
    let p3 = OrderSpec::block(3, 3).unwrap();
    let ex1 = p2.compare_monomials(&mono("x1^5", 3), &mono("x3", 3)).unwrap().is_lt();
    let ex2 = [p2, p3, OrderSpec::lex(3), OrderSpec::degrevlex(3)]
        .iter()
        .all(|o| o.compare_monomials(&Monomial::one(3), &mono("x1*x2", 3)).unwrap().is_lt());
    let ex3 = p3.compare_monomials(&mono("x3^4", 3), &mono("x1^3*x2^2", 3)).unwrap().is_lt()
        && p3.leading_term(&parse_poly("x3^4 + x1^3*x2^2", 3, f).unwrap()).unwrap().0 == mono("x3^4", 3);

    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 10);
    let mut good = 0;
    const TRIPLES: usize = 10_000;
    for _ in 0..TRIPLES {
        let d = rng.gen_range(1..=5);
        let ord = match rng.gen_range(0..3) {
            0 => OrderSpec::lex(d),
            1 => OrderSpec::degrevlex(d),
            _ => OrderSpec::block(rng.gen_range(1..=d), d).unwrap(),
        };
        let mut draw = || {
            let e: Vec<u16> = (0..d).map(|_| rng.gen_range(0..5)).collect();
            Monomial::from_exponents(&e)
        };
        let (s, a, b) = (draw(), draw(), draw());
        let one = Monomial::one(d);
        let least = ord.cmp(&one, &a).is_le() && ord.cmp(&one, &s).is_le();
        let compatible = ord.cmp(&a, &b) == ord.cmp(&s.mul(&a), &s.mul(&b));
        let antisym = ord.cmp(&a, &b) == ord.cmp(&b, &a).reverse() && (ord.cmp(&a, &b).is_eq() == (a == b));
        let transitive = !(ord.cmp(&a, &b).is_le() && ord.cmp(&b, &s).is_le()) || ord.cmp(&a, &s).is_le();
        good += usize::from(least && compatible && antisym && transitive);
    }
    Outcome {
        ok: ex1 && ex2 && ex3 && rate(good, TRIPLES) >= REQUIRED_PASS_RATE,
        detail: format!("examples {ex1}/{ex2}/{ex3}; {good}/{TRIPLES} random triples admissible"),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("example N=3", || example(&[3], LIMIT_C1)),
        ("example N=4,5", || example(&[4, 5], LIMIT_C2)),
        ("Hilbert-Burch bound", c3_hilbert_burch),
        ("e1 bound for m-primary ideals", c4_m_primary),
        ("socle length dominates mu_n", c5_socle),
        ("power of m inside forms ideal", c6_combinatorics),
        ("grade-3 Pfaffian main bound", c7_pfaffian),
        ("local division", c8_division),
        ("superfluous filter agrees with mu", c9_mu_agreement),
        ("monomial orders", c10_orders),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        failed += usize::from(!out.ok);
        println!(
            "{} criterion {:>2} {name}: {} [{:.1?}]",
            if out.ok { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            start.elapsed()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
