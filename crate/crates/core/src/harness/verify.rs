//! Evaluating every side of a record and comparing them term by term.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::registry::{builtin_identities, lookup_identity};
use super::report::{Mismatch, SideReport, Status, VerificationReport};
use super::{HarnessError, IdentityRecord};

/// Per-kind caps on `n`; sides are evaluated to `min(N, cap)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enumeration: u64,
    pub pairs: u64,
    pub bijection: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 60,
            pairs: 30,
            bijection: 35,
        }
    }
}

impl Limits {
    /// No caps at all.
    pub fn unbounded() -> Self {
        Limits {
            enumeration: u64::MAX,
            pairs: u64::MAX,
            bijection: u64::MAX,
        }
    }
}

fn first_disagreement(reference: &[Option<&BigInt>], side: &SideReport) -> Option<(u64, BigInt, BigInt)> {
    reference
        .iter()
        .zip(&side.values)
        .enumerate()
        .find_map(|(n, (r, v))| match r {
            Some(r) if *r != v => Some((n as u64, (*r).clone(), v.clone())),
            _ => None,
        })
}

/// Evaluates and compares the sides of `record` for `0 <= n <= max_n`.
///
/// At each `n` the reference is the first proven side with a value there.
/// Any proven side that errors or disagrees makes the report FAIL; claim
/// sides that error or disagree make it FLAGGED.
pub fn verify_record(record: &IdentityRecord, max_n: u64, limits: &Limits) -> VerificationReport {
    let start = Instant::now();
    let sides: Vec<SideReport> = record
        .sides
        .iter()
        .map(|spec| {
            let (values, error) = match spec.side.values(max_n, limits) {
                Ok(v) => (v, None),
                Err(e) => (Vec::new(), Some(e.to_string())),
            };
            SideReport {
                label: spec.label.clone(),
                kind: spec.side.kind().to_string(),
                claim: spec.claim,
                max_n: (!values.is_empty()).then(|| values.len() as u64 - 1),
                values,
                error,
            }
        })
        .collect();

    let proven: Vec<&SideReport> = sides.iter().filter(|s| !s.claim && s.error.is_none()).collect();
    let longest = proven.iter().map(|s| s.values.len()).max().unwrap_or(0);
    let reference: Vec<Option<&BigInt>> = (0..longest)
        .map(|n| proven.iter().find_map(|s| s.values.get(n)))
        .collect();
    let mut status = Status::Pass;
    let mut proven_mismatch: Option<Mismatch> = None;
    let mut claim_mismatch: Option<Mismatch> = None;
    let mut notes = record.notes.clone();

    let proven_count = sides.iter().filter(|s| !s.claim).count();
    if proven_count == 0 || proven.is_empty() {
        status = Status::Fail;
    }
    for side in &sides {
        if let Some(e) = &side.error {
            if side.claim {
                if status == Status::Pass {
                    status = Status::Flagged;
                }
                notes.push(format!("{} could not be evaluated: {e}", side.label));
            } else {
                status = Status::Fail;
            }
            continue;
        }
        if let Some((n, expected, found)) = first_disagreement(&reference, side) {
            let m = Mismatch {
                n,
                side: side.label.clone(),
                expected,
                found,
            };
            let slot = if side.claim {
                &mut claim_mismatch
            } else {
                &mut proven_mismatch
            };
            if slot.as_ref().is_none_or(|old| m.n < old.n) {
                *slot = Some(m);
            }
        }
    }
    if proven_mismatch.is_some() {
        status = Status::Fail;
    } else if claim_mismatch.is_some() && status == Status::Pass {
        status = Status::Flagged;
    }
    let compared = sides.iter().filter_map(|s| s.max_n).min();
    if compared.is_some_and(|c| c < max_n) {
        notes.push(format!(
            "sides evaluated to different bounds; compared where values exist (shortest reaches n={})",
            compared.unwrap_or(0)
        ));
    }
    VerificationReport {
        id: record.id.clone(),
        statement: record.statement.clone(),
        expectation: record.expectation(),
        max_n,
        scope: format!("truncated check: coefficients of q^0..q^{max_n} only, not an equality of infinite series"),
        status,
        sides,
        first_mismatch: proven_mismatch.or(claim_mismatch),
        notes,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}

pub fn verify(id: &str, max_n: u64, limits: &Limits) -> Result<VerificationReport, HarnessError> {
    let record = lookup_identity(id).ok_or_else(|| HarnessError::UnknownIdentity(id.to_string()))?;
    Ok(verify_record(&record, max_n, limits))
}

/// Verifies every registered identity, in registry order. `jobs > 1` runs
/// them on a worker pool of that size.
pub fn verify_all(max_n: u64, limits: &Limits, jobs: usize) -> Vec<VerificationReport> {
    let records = builtin_identities();
    if jobs <= 1 {
        return records.iter().map(|r| verify_record(r, max_n, limits)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| records.par_iter().map(|r| verify_record(r, max_n, limits)).collect())
}
