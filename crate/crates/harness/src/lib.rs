//! Experiment harness: bound formulas, per-instance evaluation, batches and
//! JSONL reports.

pub mod batch;
pub mod bounds;
pub mod config;
pub mod evaluate;
pub mod record;
pub mod report;
pub mod selftest;

pub use batch::{run_batch, BatchSpec, BatchSummary, FamilySpec};
pub use bounds::BoundSet;
pub use config::Config;
pub use evaluate::evaluate_instance;
pub use record::{ExperimentRecord, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] stdbasis::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("config: {0}")]
    Config(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("generation failed for instance {index}: {source}")]
    Generation { index: usize, source: stdbasis::Error },
}
