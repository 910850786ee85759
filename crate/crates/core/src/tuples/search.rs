use std::ops::RangeInclusive;
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use super::{exceeds_radical_power, AbcTuple, Epsilon, Verdict};
use crate::arith::{CoprimeMode, SpfSieve};
use crate::error::{Error, Result};
use crate::pool::WorkerPool;

/// Enumerator for all coprime tuples with `k` parts and `b <= b_max`.
///
/// Holds a radical table for `0..=b_max`; cloning is cheap.
#[derive(Debug, Clone)]
pub struct TupleSearch {
    k: usize,
    b_max: u64,
    mode: CoprimeMode,
    rad: Arc<[u64]>,
}

impl TupleSearch {
    pub fn new(k: usize, b_max: u64, mode: CoprimeMode) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("k must be at least 2, got {k}")));
        }
        if b_max < 2 {
            return Err(Error::domain(format!("b_max must be at least 2, got {b_max}")));
        }
        // Radicals are accumulated in u128; the product of all k + 1 members
        // bounds them.
        let fits = (b_max as u128)
            .checked_pow(k as u32 + 1)
            .is_some();
        if !fits || b_max >= u32::MAX as u64 {
            return Err(Error::Overflow("b_max^(k+1) must fit in 128 bits"));
        }
        let rad = SpfSieve::new(b_max + 1).radical_table(b_max + 1);
        Ok(TupleSearch {
            k,
            b_max,
            mode,
            rad: rad.into(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b_max(&self) -> u64 {
        self.b_max
    }

    pub fn mode(&self) -> CoprimeMode {
        self.mode
    }

    /// Smallest `b` that has any tuple.
    pub fn b_min(&self) -> u64 {
        self.k as u64
    }

    pub fn iter(&self) -> Tuples {
        self.iter_range(self.b_min()..=self.b_max)
    }

    pub fn iter_range(&self, range: RangeInclusive<u64>) -> Tuples {
        let lo = (*range.start()).max(self.b_min());
        let hi = (*range.end()).min(self.b_max);
        Tuples {
            search: self.clone(),
            b: lo,
            b_hi: hi,
            parts: Vec::new(),
        }
    }

    /// Calls `f(parts, radical)` for every admissible tuple summing to `b`,
    /// in lexicographic order of `parts`.
    fn visit_b(&self, b: u64, mut f: impl FnMut(&[u64], u128)) {
        let Some(mut parts) = first_parts(self.k, b) else {
            return;
        };
        loop {
            if self.admissible(&parts, b) {
                f(&parts, self.radical_of(&parts, b));
            }
            if !next_parts(&mut parts) {
                break;
            }
        }
    }

    fn admissible(&self, parts: &[u64], b: u64) -> bool {
        match self.mode {
            // gcd(parts) divides their sum, so it decides the whole tuple.
            CoprimeMode::Setwise => parts.iter().fold(0u64, |g, a| g.gcd(a)) == 1,
            CoprimeMode::Pairwise => {
                parts.iter().enumerate().all(|(i, a)| {
                    *a == 1 || (a.gcd(&b) == 1 && parts[i + 1..].iter().all(|c| a.gcd(c) == 1))
                })
            }
        }
    }

    fn radical_of(&self, parts: &[u64], b: u64) -> u128 {
        let mut acc = self.rad[b as usize] as u128;
        for &a in parts {
            let r = self.rad[a as usize];
            let g = ((acc % r as u128) as u64).gcd(&r);
            acc *= (r / g) as u128;
        }
        acc
    }

    /// Tuples over `range` violating `b > r^(1+ε)`, in canonical order.
    pub fn scan(&self, range: RangeInclusive<u64>, eps: Epsilon, pool: &WorkerPool) -> ScanResult {
        let per_b: Vec<ScanResult> = pool.install(|| {
            self.clamp(range)
                .into_par_iter()
                .map(|b| {
                    let mut out = ScanResult::default();
                    self.visit_b(b, |parts, r| match exceeds_radical_power(b, r, eps) {
                        Verdict::Below => {}
                        Verdict::Above => out.hits.push(self.tuple(parts, b, r)),
                        Verdict::Borderline => out.borderline.push(self.tuple(parts, b, r)),
                    });
                    out
                })
                .collect()
        });
        let mut merged = ScanResult::default();
        for r in per_b {
            merged.hits.extend(r.hits);
            merged.borderline.extend(r.borderline);
        }
        merged
    }

    pub fn count(&self, range: RangeInclusive<u64>, eps: Epsilon, pool: &WorkerPool) -> ViolationCount {
        pool.install(|| {
            self.clamp(range)
                .into_par_iter()
                .map(|b| {
                    let mut c = ViolationCount::default();
                    self.visit_b(b, |_, r| match exceeds_radical_power(b, r, eps) {
                        Verdict::Below => {}
                        Verdict::Above => c.count += 1,
                        Verdict::Borderline => c.borderline += 1,
                    });
                    c
                })
                .reduce(ViolationCount::default, |a, b| ViolationCount {
                    count: a.count + b.count,
                    borderline: a.borderline + b.borderline,
                })
        })
    }

    fn clamp(&self, range: RangeInclusive<u64>) -> RangeInclusive<u64> {
        (*range.start()).max(self.b_min())..=(*range.end()).min(self.b_max)
    }

    fn tuple(&self, parts: &[u64], b: u64, r: u128) -> AbcTuple {
        AbcTuple::from_parts_unchecked(parts.to_vec(), b, r)
    }
}

/// `[1, ..., 1, b - k + 1]`, the lexicographically first composition.
fn first_parts(k: usize, b: u64) -> Option<Vec<u64>> {
    if b < k as u64 {
        return None;
    }
    let mut parts = vec![1u64; k];
    parts[k - 1] = b - (k as u64 - 1);
    Some(parts)
}

/// Advances to the next non-decreasing composition with the same sum and
/// length, in lexicographic order. Returns `false` after the last one.
fn next_parts(parts: &mut [u64]) -> bool {
    let k = parts.len();
    let mut suffix = parts[k - 1];
    for i in (0..k - 1).rev() {
        suffix += parts[i];
        let v = parts[i] + 1;
        let width = (k - i) as u64;
        if suffix >= width * v {
            parts[i..k - 1].fill(v);
            parts[k - 1] = suffix - (width - 1) * v;
            return true;
        }
    }
    false
}

/// Canonical-order stream of admissible tuples.
pub struct Tuples {
    search: TupleSearch,
    b: u64,
    b_hi: u64,
    parts: Vec<u64>,
}

impl Iterator for Tuples {
    type Item = AbcTuple;

    fn next(&mut self) -> Option<AbcTuple> {
        loop {
            if self.b > self.b_hi {
                return None;
            }
            let advanced = if self.parts.is_empty() {
                match first_parts(self.search.k, self.b) {
                    Some(p) => {
                        self.parts = p;
                        true
                    }
                    None => false,
                }
            } else {
                next_parts(&mut self.parts)
            };
            if !advanced {
                self.parts.clear();
                self.b += 1;
                continue;
            }
            if self.search.admissible(&self.parts, self.b) {
                let r = self.search.radical_of(&self.parts, self.b);
                return Some(self.search.tuple(&self.parts, self.b, r));
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScanResult {
    pub hits: Vec<AbcTuple>,
    pub borderline: Vec<AbcTuple>,
}

/// High-quality tuples ranked by descending quality, plus any tuples too
/// close to the threshold to classify.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct HuntReport {
    pub hits: Vec<AbcTuple>,
    pub borderline: Vec<AbcTuple>,
}

impl From<ScanResult> for HuntReport {
    fn from(mut scan: ScanResult) -> Self {
        scan.hits.sort_by(AbcTuple::rank_cmp);
        scan.borderline.sort_by(AbcTuple::canonical_cmp);
        HuntReport {
            hits: scan.hits,
            borderline: scan.borderline,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ViolationCount {
    pub count: u64,
    pub borderline: u64,
}

pub fn enumerate_tuples(k: usize, b_max: u64, mode: CoprimeMode) -> Result<Tuples> {
    Ok(TupleSearch::new(k, b_max, mode)?.iter())
}

/// Every tuple with quality above `1 + ε`, best first.
pub fn hunt_high_quality(
    k: usize,
    b_max: u64,
    eps: Epsilon,
    mode: CoprimeMode,
    pool: &WorkerPool,
) -> Result<HuntReport> {
    let search = TupleSearch::new(k, b_max, mode)?;
    Ok(search.scan(search.b_min()..=b_max, eps, pool).into())
}

/// Number of tuples with `b > rad^(1+ε)`.
pub fn count_violations(
    k: usize,
    b_max: u64,
    eps: Epsilon,
    mode: CoprimeMode,
    pool: &WorkerPool,
) -> Result<ViolationCount> {
    let search = TupleSearch::new(k, b_max, mode)?;
    Ok(search.count(search.b_min()..=b_max, eps, pool))
}
