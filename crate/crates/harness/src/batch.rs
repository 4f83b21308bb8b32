//! Batches of random instances evaluated on a worker pool, written as JSONL
//! in instance order.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;

use stdbasis::families::{
    complete_intersection, dimension_example, dimension_example_g4, gen_hilbert_burch, gen_mprimary, gen_pfaffian,
    IdealSpec,
};
use stdbasis::Error;

use crate::config::Config;
use crate::evaluate::evaluate_instance;
use crate::record::{ExperimentRecord, Verdict};
use crate::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    HilbertBurch { t: usize, entry_degree: u32 },
    Pfaffian { k: usize, entry_degree: u32 },
    /// `gens` defaults to `d + 1`.
    MPrimary { gens: Option<usize> },
    CompleteIntersection { exps: Vec<u16> },
    /// One instance per value of `N`; `d` is derived.
    Example { big_n: Vec<usize> },
    ExampleG4 { big_n: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchSpec {
    pub family: FamilySpec,
    pub d: usize,
    /// Defaults to `ord(J) + 1`, or 3 for the m-primary and example families.
    pub n: Option<u32>,
    pub count: usize,
    pub seed: u64,
}

/// Parses `3` or an inclusive range `3..5`.
pub fn parse_n_range(text: &str) -> Result<Vec<usize>, HarnessError> {
    let bad = || HarnessError::Usage(format!("expected N or A..B, got {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

/// Seed of instance `index` within a batch.
pub fn instance_seed(master: u64, index: usize) -> u64 {
    let mut z = master ^ (index as u64).wrapping_add(1).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 31)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^ (z >> 29)
}

impl BatchSpec {
    pub fn len(&self) -> usize {
        match &self.family {
            FamilySpec::Example { big_n } | FamilySpec::ExampleG4 { big_n } => big_n.len(),
            _ => self.count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Builds instance `index` and the level `n` it is evaluated at.
    pub fn instance(&self, index: usize, config: &Config) -> Result<(IdealSpec, u32), Error> {
        let field = config.field();
        let budget = config.retry_budget;
        let seed = instance_seed(self.seed, index);
        let spec = match &self.family {
            FamilySpec::HilbertBurch { t, entry_degree } => {
                gen_hilbert_burch(self.d, *t, *entry_degree, seed, field, budget)?
            }
            FamilySpec::Pfaffian { k, entry_degree } => gen_pfaffian(self.d, *k, *entry_degree, seed, field, budget)?,
            FamilySpec::MPrimary { gens } => {
                let n = self.n.unwrap_or(3);
                gen_mprimary(self.d, n, gens.unwrap_or(self.d + 1), seed, field, budget)?
            }
            FamilySpec::CompleteIntersection { exps } => complete_intersection(self.d, exps, field)?,
            FamilySpec::Example { big_n } => dimension_example(big_n[index], field)?,
            FamilySpec::ExampleG4 { big_n } => dimension_example_g4(big_n[index], field)?,
        };
        let n = match (&self.family, self.n) {
            (_, Some(n)) => n,
            (FamilySpec::MPrimary { .. } | FamilySpec::Example { .. } | FamilySpec::ExampleG4 { .. }, None) => 3,
            (_, None) => spec.order().unwrap_or(1).max(1) + 1,
        };
        Ok((spec, n))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.holds, self.violated, self.not_applicable)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cell {
    pub instances: usize,
    pub unstable: usize,
    pub max_mu: usize,
    pub e1: Tally,
    pub e2: Tally,
    pub main: Tally,
}

/// Counts per `(family, d, n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub cells: BTreeMap<(String, usize, u32), Cell>,
    /// Instance index and message for each generator that ran out of retries.
    pub generation_failures: Vec<(usize, String)>,
}

impl BatchSummary {
    pub fn add(&mut self, r: &ExperimentRecord) {
        let cell = self.cells.entry((r.family.clone(), r.d, r.n)).or_default();
        cell.instances += 1;
        cell.unstable += usize::from(!r.mu_stable);
        cell.max_mu = cell.max_mu.max(r.mu);
        cell.e1.add(r.verdict_e1);
        cell.e2.add(r.verdict_e2);
        cell.main.add(r.verdict_main);
    }

    pub fn violations(&self) -> usize {
        self.cells
            .values()
            .map(|c| c.e1.violated + c.e2.violated + c.main.violated)
            .sum()
    }
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<22} {:>3} {:>3} {:>6} {:>8} {:>6} {:>11} {:>11} {:>11}",
            "family", "d", "n", "count", "unstable", "max_mu", "e1 h/v/na", "e2 h/v/na", "main h/v/na"
        )?;
        for ((family, d, n), c) in &self.cells {
            writeln!(
                f,
                "{:<22} {:>3} {:>3} {:>6} {:>8} {:>6} {:>11} {:>11} {:>11}",
                family,
                d,
                n,
                c.instances,
                c.unstable,
                c.max_mu,
                c.e1.to_string(),
                c.e2.to_string(),
                c.main.to_string()
            )?;
        }
        for (i, msg) in &self.generation_failures {
            writeln!(f, "generation failure at instance {i}: {msg}")?;
        }
        Ok(())
    }
}

enum Outcome {
    Record(Box<ExperimentRecord>),
    GenerationFailed(String),
}

fn run_one(batch: &BatchSpec, index: usize, config: &Config) -> Result<Outcome, HarnessError> {
    let (spec, n) = match batch.instance(index, config) {
        Ok(x) => x,
        Err(e @ Error::RetryBudgetExhausted(_)) => return Ok(Outcome::GenerationFailed(e.to_string())),
        Err(e) => return Err(HarnessError::Generation { index, source: e }),
    };
    Ok(Outcome::Record(Box::new(evaluate_instance(&spec, n, config)?)))
}

/// Evaluates every instance and writes one JSON line per record. Output is
/// identical for any worker count, apart from `wall_ms`.
pub fn run_batch(batch: &BatchSpec, config: &Config, out: &mut dyn Write) -> Result<BatchSummary, HarnessError> {
    config.validate()?;
    let total = batch.len();
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let mut summary = BatchSummary::default();
    let (tx, rx) = mpsc::channel();
    let mut first_error = None;
    std::thread::scope(|scope| {
        for _ in 0..config.workers.min(total.max(1)) {
            let tx = tx.clone();
            let (next, stop) = (&next, &stop);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= total || stop.load(Ordering::Relaxed) {
                    break;
                }
                if tx.send((i, run_one(batch, i, config))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending = BTreeMap::new();
        let mut expected = 0;
        for (i, res) in rx {
            pending.insert(i, res);
            while let Some(res) = pending.remove(&expected) {
                expected += 1;
                if first_error.is_some() {
                    continue;
                }
                let written = match res {
                    Ok(Outcome::Record(r)) => {
                        summary.add(&r);
                        writeln!(out, "{}", r.to_line()).map_err(HarnessError::from)
                    }
                    Ok(Outcome::GenerationFailed(msg)) => {
                        summary.generation_failures.push((expected - 1, msg));
                        Ok(())
                    }
                    Err(e) => Err(e),
                };
                if let Err(e) = written {
                    stop.store(true, Ordering::Relaxed);
                    first_error = Some(e);
                }
            }
        }
    });
    match first_error {
        Some(e) => Err(e),
        None => {
            out.flush()?;
            Ok(summary)
        }
    }
}
