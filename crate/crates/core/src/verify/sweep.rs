//! Runs a set of claims over an instance stream.
//!
//! Records are pulled in fixed-size chunks; each chunk is evaluated on a
//! worker pool and folded into the summary in ordinal order, so the summary
//! does not depend on the number of workers.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use super::{report_for, Analysis, Claim, VerificationReport, VerifyError};
use crate::io::{InstanceRecord, StreamError};

const CHUNK: usize = 1024;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

fn as_pairs<S: Serializer>(m: &BTreeMap<usize, usize>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(m.iter())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub claims: Vec<Claim>,
    /// Instances processed.
    pub total: usize,
    /// Instances on which each claim's preconditions held.
    pub checked: BTreeMap<Claim, usize>,
    /// Instances on which each claim's preconditions failed.
    pub skipped: BTreeMap<Claim, usize>,
    /// Failing reports in ordinal order, claims in the order given.
    pub failures: Vec<VerificationReport>,
    /// `[num_lines, instances]` pairs; instances without lines (fewer than
    /// two points, or a disconnected graph) land in bucket 0.
    #[serde(serialize_with = "as_pairs")]
    pub histogram: BTreeMap<usize, usize>,
    /// Fewest distinct lines seen per point count, as `[n, num_lines]`.
    #[serde(serialize_with = "as_pairs")]
    pub min_lines_by_n: BTreeMap<usize, usize>,
    /// Wall-clock time. Not serialized, so reports stay byte-identical
    /// across runs.
    #[serde(skip)]
    pub runtime: Duration,
}

impl SweepSummary {
    pub fn new(claims: &[Claim]) -> Self {
        SweepSummary {
            claims: claims.to_vec(),
            total: 0,
            checked: claims.iter().map(|&c| (c, 0)).collect(),
            skipped: claims.iter().map(|&c| (c, 0)).collect(),
            failures: Vec::new(),
            histogram: BTreeMap::new(),
            min_lines_by_n: BTreeMap::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, r: Evaluated) {
        self.total += 1;
        *self.histogram.entry(r.num_lines).or_default() += 1;
        if r.num_lines > 0 {
            let slot = self.min_lines_by_n.entry(r.n).or_insert(r.num_lines);
            *slot = (*slot).min(r.num_lines);
        }
        for (claim, res) in self.claims.clone().into_iter().zip(r.results) {
            match res {
                Ok(rep) => {
                    *self.checked.get_mut(&claim).expect("claim registered") += 1;
                    if !rep.holds {
                        self.failures.push(rep);
                    }
                }
                Err(_) => *self.skipped.get_mut(&claim).expect("claim registered") += 1,
            }
        }
    }
}

struct Evaluated {
    n: usize,
    num_lines: usize,
    results: Vec<Result<VerificationReport, VerifyError>>,
}

fn evaluate(rec: &InstanceRecord, claims: &[Claim]) -> Evaluated {
    let a = Analysis::new(&rec.payload);
    let results = claims
        .iter()
        .map(|&c| report_for(&a, c, rec.ordinal, rec.format, &rec.source_form))
        .collect();
    Evaluated {
        n: rec.payload.n(),
        num_lines: a.system().map_or(0, |s| s.num_lines()),
        results,
    }
}

/// Runs every claim on every record with `jobs` workers (`0` or `1` runs on
/// the calling thread). The first stream error aborts the sweep.
pub fn sweep<I>(source: I, claims: &[Claim], jobs: usize) -> Result<SweepSummary, SweepError>
where
    I: IntoIterator<Item = Result<InstanceRecord, StreamError>>,
{
    let start = Instant::now();
    let pool = if jobs > 1 {
        Some(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
    } else {
        None
    };
    let mut summary = SweepSummary::new(claims);
    let mut source = source.into_iter();
    let mut chunk = Vec::with_capacity(CHUNK);
    loop {
        chunk.clear();
        for rec in source.by_ref().take(CHUNK) {
            chunk.push(rec?);
        }
        if chunk.is_empty() {
            break;
        }
        let evaluated: Vec<Evaluated> = match &pool {
            Some(p) => p.install(|| chunk.par_iter().map(|r| evaluate(r, claims)).collect()),
            None => chunk.iter().map(|r| evaluate(r, claims)).collect(),
        };
        for e in evaluated {
            summary.absorb(e);
        }
    }
    summary.runtime = start.elapsed();
    Ok(summary)
}
