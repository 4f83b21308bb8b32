use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use harness::batch::{parse_n_range, run_batch, BatchSpec, FamilySpec};
use harness::report::{read_records, summarize};
use harness::selftest::run_selftest;
use harness::{Config, HarnessError};
use stdbasis::families::verify_example;
use stdbasis::local::{hironaka_divide, truncated_staircase};
use stdbasis::trunc::TruncationLevel;
use stdbasis::{parse_ideal_file, parse_poly, IdealFile, OrderSpec};

#[derive(Parser)]
#[command(name = "stdbasis", version, about = "Generator-count experiments for perfect ideals")]
struct Cli {
    /// `key = value` configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    HilbertBurch,
    Pfaffian,
    MPrimary,
    CompleteIntersection,
    Example,
    ExampleG4,
}

#[derive(Subcommand)]
enum Command {
    /// Run built-in consistency checks.
    Selftest,
    /// Evaluate a batch of instances and write JSONL records.
    Eval {
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Number of variables (ignored by the example families).
        #[arg(long)]
        d: Option<usize>,
        /// Level n; defaults to ord(J)+1, or 3 for m-primary and example.
        #[arg(long)]
        n: Option<u32>,
        /// Number of instances.
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        /// Hilbert-Burch matrix columns.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Pfaffian matrix half-size.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Degree of matrix entries.
        #[arg(long, default_value_t = 1)]
        deg: u32,
        /// m-primary generator count (default d+1).
        #[arg(long)]
        gens: Option<usize>,
        /// Complete-intersection exponents, comma separated.
        #[arg(long, value_delimiter = ',')]
        exps: Vec<u16>,
        /// Example size, `3` or `3..5`.
        #[arg(long = "N", default_value = "3")]
        big_n: String,
    },
    /// Check the dimension-dependent example.
    VerifyExample {
        #[arg(long = "N")]
        big_n: String,
    },
    /// Divide a polynomial by an ideal's generators modulo m^T, printing each step.
    Divide {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        order: String,
        #[arg(long)]
        trunc: u32,
    },
    /// Print minimal leading monomials of an ideal modulo m^T.
    Staircase {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        order: String,
        #[arg(long)]
        trunc: u32,
    },
    /// Summarize a JSONL record file.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn load_config(path: Option<&PathBuf>) -> Result<Config, HarnessError> {
    match path {
        Some(p) => Config::parse(&std::fs::read_to_string(p)?),
        None => Ok(Config::default()),
    }
}

fn load_ideal(path: &PathBuf) -> Result<IdealFile, HarnessError> {
    Ok(parse_ideal_file(&std::fs::read_to_string(path)?)?)
}

fn family_spec(name: FamilyName, t: usize, k: usize, deg: u32, gens: Option<usize>, exps: Vec<u16>, big_n: &str) -> Result<FamilySpec, HarnessError> {
    Ok(match name {
        FamilyName::HilbertBurch => FamilySpec::HilbertBurch { t, entry_degree: deg },
        FamilyName::Pfaffian => FamilySpec::Pfaffian { k, entry_degree: deg },
        FamilyName::MPrimary => FamilySpec::MPrimary { gens },
        FamilyName::CompleteIntersection => FamilySpec::CompleteIntersection { exps },
        FamilyName::Example => FamilySpec::Example {
            big_n: parse_n_range(big_n)?,
        },
        FamilyName::ExampleG4 => FamilySpec::ExampleG4 {
            big_n: parse_n_range(big_n)?,
        },
    })
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    let mut config = load_config(cli.config.as_ref())?;
    let stdout = io::stdout();
    match cli.command {
        Command::Selftest => {
            let results = run_selftest(&config);
            let mut out = stdout.lock();
            for (name, ok) in &results {
                writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" })?;
            }
            let ok = results.iter().all(|r| r.1);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Eval {
            family,
            d,
            n,
            count,
            p,
            seed,
            out,
            workers,
            t,
            k,
            deg,
            gens,
            exps,
            big_n,
        } => {
            if let Some(p) = p {
                config.p = p;
            }
            if let Some(w) = workers {
                config.workers = w;
            }
            config.validate()?;
            let family = family_spec(family, t, k, deg, gens, exps, &big_n)?;
            let d = match (&family, d) {
                (FamilySpec::Example { .. } | FamilySpec::ExampleG4 { .. }, d) => d.unwrap_or(0),
                (FamilySpec::CompleteIntersection { exps }, None) => exps.len(),
                (_, Some(d)) => d,
                (_, None) => return Err(HarnessError::Usage("--d is required for this family".into())),
            };
            let batch = BatchSpec {
                family,
                d,
                n,
                count,
                seed,
            };
            let summary = match &out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    run_batch(&batch, &config, &mut w)?
                }
                None => run_batch(&batch, &config, &mut stdout.lock())?,
            };
            if out.is_some() {
                print!("{summary}");
            } else {
                eprint!("{summary}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyExample { big_n } => {
            let mut all = true;
            let mut out = stdout.lock();
            for n in parse_n_range(&big_n)? {
                let report = verify_example(n, config.field(), config.policy())?;
                for (name, ok) in report.checks() {
                    writeln!(out, "N={n} {} {name}", if ok { "PASS" } else { "FAIL" })?;
                }
                writeln!(out, "N={n} mu={} T_used={} stable={}", report.mu.mu, report.mu.t_used, report.mu.stable)?;
                all &= report.passed();
            }
            Ok(if all { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Divide {
            ideal,
            poly,
            order,
            trunc,
        } => {
            let file = load_ideal(&ideal)?;
            let ord = OrderSpec::parse(&order, file.nvars)?;
            let f = parse_poly(&poly, file.nvars, file.field)?;
            let div = hironaka_divide(&f, &file.generators, &ord, TruncationLevel::new(trunc)?)?;
            let mut out = stdout.lock();
            for step in &div.trace {
                writeln!(out, "{step}")?;
            }
            for (i, q) in div.quotients.iter().enumerate() {
                writeln!(out, "q{} = {q}", i + 1)?;
            }
            writeln!(out, "remainder = {}", div.remainder)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Staircase { ideal, order, trunc } => {
            let file = load_ideal(&ideal)?;
            let ord = OrderSpec::parse(&order, file.nvars)?;
            let s = truncated_staircase(&file.generators, &ord, TruncationLevel::new(trunc)?)?;
            let mut out = stdout.lock();
            for (m, w) in s.generators.iter().zip(&s.witnesses) {
                writeln!(out, "{m}\t{w}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { input } => {
            let records = read_records(BufReader::new(File::open(input)?))?;
            print!("{}", summarize(&records));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
