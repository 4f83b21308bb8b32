//! Summaries of existing JSONL record files.

use std::io::BufRead;

use crate::batch::BatchSummary;
use crate::record::ExperimentRecord;
use crate::HarnessError;

/// Parses one record per non-blank line.
pub fn read_records<R: BufRead>(input: R) -> Result<Vec<ExperimentRecord>, HarnessError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r = ExperimentRecord::from_line(&line).map_err(|source| HarnessError::Json { line: i + 1, source })?;
        out.push(r);
    }
    Ok(out)
}

pub fn summarize(records: &[ExperimentRecord]) -> BatchSummary {
    let mut s = BatchSummary::default();
    for r in records {
        s.add(r);
    }
    s
}
