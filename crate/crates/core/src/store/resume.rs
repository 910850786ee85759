//! Checkpointed drivers for the two long-running searches.

use super::checkpoint::{run_resumable, ResumableRun, RunOutcome, SearchParams};
use crate::error::{Error, Result};
use crate::pool::WorkerPool;
use crate::powersum::{PowerSumSearch, PowerSumSolution};
use crate::tuples::{exceeds_radical_power, AbcTuple, Epsilon, HuntReport, ScanResult, TupleSearch, Verdict};

impl SearchParams {
    pub fn abc_hunt(search: &TupleSearch, epsilon: Epsilon) -> Self {
        SearchParams::AbcHunt {
            k: search.k(),
            b_max: search.b_max(),
            epsilon,
            mode: search.mode(),
        }
    }

    pub fn power_sum(search: &PowerSumSearch) -> Self {
        SearchParams::PowerSum {
            k: search.k(),
            n: search.n(),
            z_max: search.z_max(),
            filter: search.filter(),
        }
    }
}

fn check_params(run: &ResumableRun, expected: SearchParams) -> Result<()> {
    if run.params != expected {
        return Err(Error::domain(format!(
            "run configured for {} but search is {}",
            run.params.canonical(),
            expected.canonical()
        )));
    }
    Ok(())
}

/// High-quality tuple hunt over `b`, checkpointed per chunk of `b` values.
/// Returns `None` when the run halted early.
pub fn resume_abc_hunt(
    search: &TupleSearch,
    epsilon: Epsilon,
    pool: &WorkerPool,
    run: &ResumableRun,
) -> Result<Option<HuntReport>> {
    check_params(run, SearchParams::abc_hunt(search, epsilon))?;
    let outcome = run_resumable(run, search.b_min()..=search.b_max(), |range| {
        let ScanResult { mut hits, borderline } = search.scan(range, epsilon, pool);
        hits.extend(borderline);
        hits.sort_by(AbcTuple::canonical_cmp);
        hits
    })?;
    Ok(match outcome {
        RunOutcome::Halted { .. } => None,
        RunOutcome::Completed(found) => {
            // Verdicts are a pure function of (b, rad, ε); split them again.
            let (borderline, hits) = found
                .into_iter()
                .partition(|t| exceeds_radical_power(t.sum_b, t.radical_r, epsilon) == Verdict::Borderline);
            Some(ScanResult { hits, borderline }.into())
        }
    })
}

/// Power-sum search over `z`, checkpointed per chunk of `z` values.
pub fn resume_power_sum(
    search: &PowerSumSearch,
    pool: &WorkerPool,
    run: &ResumableRun,
) -> Result<Option<Vec<PowerSumSolution>>> {
    check_params(run, SearchParams::power_sum(search))?;
    let outcome = run_resumable(run, 2..=search.z_max(), |range| search.scan(range, pool))?;
    Ok(match outcome {
        RunOutcome::Halted { .. } => None,
        RunOutcome::Completed(found) => Some(found),
    })
}
