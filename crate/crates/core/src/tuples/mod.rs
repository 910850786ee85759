//! Coprime (k+1)-tuples `a_1 + ... + a_k = b`, their quality, and the
//! empirical probes of the three generalized abc bounds.

mod search;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use search::{
    count_violations, enumerate_tuples, hunt_high_quality, HuntReport, ScanResult, TupleSearch,
    Tuples, ViolationCount,
};

use crate::arith;
use crate::error::{Error, Result};

/// Results this close to a real-valued threshold are reported as borderline
/// instead of being classified.
pub const BORDERLINE_TOLERANCE: f64 = 1e-9;

/// A tuple `(a_1, ..., a_k; b)` with `a_1 + ... + a_k = b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbcTuple {
    /// Non-decreasing.
    pub parts: Vec<u64>,
    pub sum_b: u64,
    pub radical_r: u128,
    pub quality_q: f64,
}

impl AbcTuple {
    /// Sorts `parts` and computes `b`, the radical and the quality.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::domain("a tuple needs at least two parts"));
        }
        if parts.contains(&0) {
            return Err(Error::domain("tuple parts must be positive"));
        }
        parts.sort_unstable();
        let sum: u128 = parts.iter().map(|&a| a as u128).sum();
        let sum_b = u64::try_from(sum)
            .ok()
            .filter(|&b| b < arith::FACTOR_LIMIT)
            .ok_or_else(|| Error::domain(format!("part sum {sum} is not below 2^63")))?;
        let mut all = parts.clone();
        all.push(sum_b);
        let radical_r = arith::radical_of_set(&all)?;
        Ok(Self::from_parts_unchecked(parts, sum_b, radical_r))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u64>, sum_b: u64, radical_r: u128) -> Self {
        AbcTuple {
            parts,
            sum_b,
            radical_r,
            quality_q: quality_from_radical(sum_b, radical_r),
        }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// All `k + 1` members, parts first.
    pub fn members(&self) -> Vec<u64> {
        let mut all = self.parts.clone();
        all.push(self.sum_b);
        all
    }

    pub fn is_coprime(&self, mode: arith::CoprimeMode) -> bool {
        arith::is_coprime(&self.members(), mode).unwrap_or(false)
    }

    /// Ascending `b`, then lexicographic parts.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.sum_b
            .cmp(&other.sum_b)
            .then_with(|| self.parts.cmp(&other.parts))
    }

    /// Descending quality, ties in canonical order.
    pub fn rank_cmp(&self, other: &Self) -> Ordering {
        other
            .quality_q
            .total_cmp(&self.quality_q)
            .then_with(|| self.canonical_cmp(other))
    }
}

impl fmt::Display for AbcTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ";{})", self.sum_b)
    }
}

/// `log(b) / log(rad(a_1 ... a_k b))`.
pub fn quality(parts: &[u64], b: u64) -> Result<f64> {
    let sum: u128 = parts.iter().map(|&a| a as u128).sum();
    if sum != b as u128 {
        return Err(Error::SumMismatch { sum, expected: b });
    }
    if parts.is_empty() || b < 2 {
        return Err(Error::domain("quality needs b >= 2 and at least one part"));
    }
    let mut all = parts.to_vec();
    all.push(b);
    let r = arith::radical_of_set(&all)?;
    Ok(quality_from_radical(b, r))
}

pub(crate) fn quality_from_radical(b: u64, r: u128) -> f64 {
    (b as f64).ln() / (r as f64).ln()
}

/// The `ε` of the abc bounds. Non-negative integers take the exact path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Epsilon {
    Integer(u32),
    Real(f64),
}

impl Epsilon {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::domain(format!("epsilon must be finite and >= 0, got {value}")));
        }
        if value.fract() == 0.0 && value <= u32::MAX as f64 {
            Ok(Epsilon::Integer(value as u32))
        } else {
            Ok(Epsilon::Real(value))
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Epsilon::Integer(e) => e as f64,
            Epsilon::Real(e) => e,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Epsilon::Integer(_))
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Epsilon::Integer(e) => write!(f, "{e}"),
            Epsilon::Real(e) => write!(f, "{e}"),
        }
    }
}

/// Outcome of comparing a tuple against a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Above,
    Below,
    /// Within [`BORDERLINE_TOLERANCE`] of a floating-point threshold.
    Borderline,
}

/// `r^e` for `r >= 2`, `None` once it exceeds `u128`.
fn checked_pow(r: u128, e: u32) -> Option<u128> {
    r.checked_pow(e)
}

/// Whether `b > r^(1+ε)`, the violation condition of bound I.
///
/// Integer `ε` compares exactly; real `ε` compares logarithms.
pub fn exceeds_radical_power(b: u64, r: u128, eps: Epsilon) -> Verdict {
    match eps {
        Epsilon::Integer(e) => match e.checked_add(1).and_then(|e1| checked_pow(r, e1)) {
            Some(bound) if (b as u128) > bound => Verdict::Above,
            _ => Verdict::Below,
        },
        Epsilon::Real(e) => {
            let log_r = (r as f64).ln();
            let gap = (b as f64).ln() - (1.0 + e) * log_r;
            classify(gap, BORDERLINE_TOLERANCE * log_r)
        }
    }
}

/// Whether `q > 1 + ε`, the high-quality condition of bound III.
///
/// Integer `ε` is decided without floating point, through the equivalent
/// `b > r^(1+ε)`.
pub fn quality_exceeds(tuple: &AbcTuple, eps: Epsilon) -> Verdict {
    match eps {
        Epsilon::Integer(_) => exceeds_radical_power(tuple.sum_b, tuple.radical_r, eps),
        Epsilon::Real(e) => classify(tuple.quality_q - (1.0 + e), BORDERLINE_TOLERANCE),
    }
}

fn classify(gap: f64, tolerance: f64) -> Verdict {
    if gap.abs() <= tolerance {
        Verdict::Borderline
    } else if gap > 0.0 {
        Verdict::Above
    } else {
        Verdict::Below
    }
}

/// Whether `b < C * r^(1+ε)`, i.e. the tuple satisfies bound II.
///
/// Exact when `ε` and `C` are non-negative integers.
pub fn check_bound_ii(tuple: &AbcTuple, eps: Epsilon, c: f64) -> bool {
    let b = tuple.sum_b;
    let r = tuple.radical_r;
    if c <= 0.0 || c.is_nan() {
        return false;
    }
    if let (Epsilon::Integer(e), true) = (eps, c.fract() == 0.0 && c < u128::MAX as f64) {
        return match e.checked_add(1).and_then(|e1| checked_pow(r, e1)) {
            Some(p) => match p.checked_mul(c as u128) {
                Some(bound) => (b as u128) < bound,
                None => true,
            },
            None => true,
        };
    }
    (b as f64).ln() < c.ln() + (1.0 + eps.value()) * (r as f64).ln()
}
