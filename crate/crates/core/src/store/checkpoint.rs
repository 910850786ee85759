use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::CoprimeMode;
use crate::error::{Error, Result};
use crate::powersum::SolutionFilter;
use crate::tuples::Epsilon;

pub const CHECKPOINT_VERSION: u32 = 1;

/// Parameters a checkpoint is bound to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchParams {
    AbcHunt {
        k: usize,
        b_max: u64,
        epsilon: Epsilon,
        mode: CoprimeMode,
    },
    PowerSum {
        k: usize,
        n: u32,
        z_max: u64,
        filter: SolutionFilter,
    },
}

impl SearchParams {
    /// Stable textual encoding; the fingerprint hashes exactly this.
    pub fn canonical(&self) -> String {
        match *self {
            SearchParams::AbcHunt { k, b_max, epsilon, mode } => {
                let eps = match epsilon {
                    Epsilon::Integer(e) => e.to_string(),
                    Epsilon::Real(e) => format!("{e:?}"),
                };
                format!("kind=abc-hunt;k={k};b_max={b_max};epsilon={eps};mode={mode};version={CHECKPOINT_VERSION}")
            }
            SearchParams::PowerSum { k, n, z_max, filter } => {
                format!("kind=power-sum;k={k};n={n};z_max={z_max};mode={filter};version={CHECKPOINT_VERSION}")
            }
        }
    }

    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.canonical().as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchCheckpoint<R> {
    pub format_version: u32,
    pub params_fingerprint: String,
    /// The canonical encoding, kept for humans reading the file.
    pub params: String,
    /// Last fully completed outer-loop value.
    pub cursor: u64,
    pub partial_results: Vec<R>,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
}

impl<R> SearchCheckpoint<R> {
    pub fn new(params: &SearchParams, cursor: u64, partial_results: Vec<R>) -> Self {
        SearchCheckpoint {
            format_version: CHECKPOINT_VERSION,
            params_fingerprint: params.fingerprint(),
            params: params.canonical(),
            cursor,
            partial_results,
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        }
    }
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".tmp");
    path.with_file_name(name)
}

/// Writes to a sibling temp file and renames it over `path`.
pub fn save_checkpoint<R: Serialize>(path: &Path, checkpoint: &SearchCheckpoint<R>) -> Result<()> {
    let body = serde_json::to_vec(checkpoint).map_err(|e| Error::Parse(e.to_string()))?;
    let tmp = tmp_path(path);
    let write = || -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&body)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    };
    write().map_err(|e| Error::io(path, e))
}

pub fn load_checkpoint<R: DeserializeOwned>(path: &Path, params: &SearchParams) -> Result<SearchCheckpoint<R>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let corrupt = |reason: String| Error::CorruptCheckpoint {
        path: path.to_path_buf(),
        reason,
    };
    let value: serde_json::Value = serde_json::from_slice(&bytes).map_err(|e| corrupt(e.to_string()))?;
    let found = value
        .get("format_version")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| corrupt("missing format_version".into()))?;
    if found != CHECKPOINT_VERSION as u64 {
        return Err(Error::VersionMismatch {
            path: path.to_path_buf(),
            expected: CHECKPOINT_VERSION,
            found: found.min(u32::MAX as u64) as u32,
        });
    }
    let expected = params.fingerprint();
    let found = value
        .get("params_fingerprint")
        .and_then(|v| v.as_str())
        .ok_or_else(|| corrupt("missing params_fingerprint".into()))?;
    if found != expected {
        return Err(Error::FingerprintMismatch {
            path: path.to_path_buf(),
            expected,
            found: found.to_string(),
        });
    }
    serde_json::from_value(value).map_err(|e| corrupt(e.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunOutcome<R> {
    Completed(Vec<R>),
    /// Stopped early on request; the checkpoint covers everything up to
    /// `cursor`.
    Halted { cursor: u64 },
}

/// Drives an outer loop in chunks, checkpointing after each chunk.
#[derive(Debug, Clone)]
pub struct ResumableRun {
    pub params: SearchParams,
    pub checkpoint: Option<PathBuf>,
    /// Outer-loop values per chunk.
    pub chunk: u64,
    /// Stop once the cursor reaches this value. Simulates an interrupted run.
    pub halt_after: Option<u64>,
}

impl ResumableRun {
    pub fn new(params: SearchParams) -> Self {
        ResumableRun {
            params,
            checkpoint: None,
            chunk: 64,
            halt_after: None,
        }
    }

    pub fn checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(path.into());
        self
    }

    pub fn chunk(mut self, chunk: u64) -> Self {
        self.chunk = chunk.max(1);
        self
    }

    pub fn halt_after(mut self, cursor: u64) -> Self {
        self.halt_after = Some(cursor);
        self
    }
}

/// Runs `scan` over `range` chunk by chunk, resuming from the checkpoint
/// when one exists. `scan` must return results in canonical order.
pub fn run_resumable<R, F>(run: &ResumableRun, range: RangeInclusive<u64>, mut scan: F) -> Result<RunOutcome<R>>
where
    R: Serialize + DeserializeOwned + Clone,
    F: FnMut(RangeInclusive<u64>) -> Vec<R>,
{
    let (lo, hi) = (*range.start(), *range.end());
    let mut results = Vec::new();
    let mut next = lo;
    if let Some(path) = run.checkpoint.as_deref().filter(|p| p.exists()) {
        let cp: SearchCheckpoint<R> = load_checkpoint(path, &run.params)?;
        results = cp.partial_results;
        next = cp.cursor.saturating_add(1).max(lo);
    }
    while next <= hi {
        let end = next.saturating_add(run.chunk - 1).min(hi);
        results.extend(scan(next..=end));
        if let Some(path) = &run.checkpoint {
            save_checkpoint(path, &SearchCheckpoint::new(&run.params, end, results.clone()))?;
        }
        if end == hi {
            break;
        }
        next = end + 1;
        if run.halt_after.is_some_and(|h| end >= h) {
            return Ok(RunOutcome::Halted { cursor: end });
        }
    }
    Ok(RunOutcome::Completed(results))
}
