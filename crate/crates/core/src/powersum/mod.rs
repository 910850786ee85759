//! Equal sums of like powers: `x_1^n + ... + x_k^n = z^n`.
//!
//! Two independent search strategies are provided. The default is a
//! descending depth-first search that fixes the largest remaining base first
//! and prunes by the range the remaining target can still reach. The
//! meet-in-the-middle variant stores sums of the lower half of each tuple in
//! a hash table and looks up the complement of every upper half.

mod search;
mod value;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use search::{search_solutions, verify_gflt_range, Algorithm, GfltReport, PowerSumSearch, PowerResult};

use crate::arith::{self, CoprimeMode};
use crate::error::{Error, Result};

/// `2k + 2`, the exponent from which the generalized Fermat claim says no
/// solutions exist.
pub fn g(k: usize) -> Result<u32> {
    if k < 2 {
        return Err(Error::domain(format!("k must be at least 2, got {k}")));
    }
    u32::try_from(2 * k + 2).map_err(|_| Error::Overflow("2k + 2 exceeds u32"))
}

/// Exact test of `sum(x^n for x in xs) == z^n`.
pub fn check_solution(xs: &[u64], z: u64, n: u32) -> bool {
    if xs.is_empty() {
        return false;
    }
    let sum: BigUint = xs.iter().map(|&x| arith::big_pow(x, n)).sum();
    sum == arith::big_pow(z, n)
}

/// Which solutions a search reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionFilter {
    #[default]
    All,
    Setwise,
    Pairwise,
}

impl SolutionFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionFilter::All => "all",
            SolutionFilter::Setwise => "setwise",
            SolutionFilter::Pairwise => "pairwise",
        }
    }

    pub fn accepts(self, solution: &PowerSumSolution) -> bool {
        match self {
            SolutionFilter::All => true,
            SolutionFilter::Setwise => solution.setwise_coprime,
            SolutionFilter::Pairwise => solution.pairwise_coprime,
        }
    }
}

impl From<CoprimeMode> for SolutionFilter {
    fn from(mode: CoprimeMode) -> Self {
        match mode {
            CoprimeMode::Setwise => SolutionFilter::Setwise,
            CoprimeMode::Pairwise => SolutionFilter::Pairwise,
        }
    }
}

impl fmt::Display for SolutionFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolutionFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SolutionFilter::All),
            other => other.parse::<CoprimeMode>().map(Into::into),
        }
    }
}

/// A witness `(x_1, ..., x_k; z)` for exponent `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerSumSolution {
    pub k: usize,
    pub n: u32,
    /// Non-decreasing.
    pub xs: Vec<u64>,
    pub z: u64,
    pub setwise_coprime: bool,
    pub pairwise_coprime: bool,
}

impl PowerSumSolution {
    /// Validates the identity exactly and derives the coprimality flags.
    pub fn new(mut xs: Vec<u64>, z: u64, n: u32) -> Result<Self> {
        xs.sort_unstable();
        if xs.len() < 2 || xs[0] == 0 || n < 2 || !check_solution(&xs, z, n) {
            return Err(Error::NotASolution { xs, z, n });
        }
        Ok(Self::from_verified(xs, z, n))
    }

    /// `xs` must be sorted and already known to satisfy the identity.
    pub(crate) fn from_verified(xs: Vec<u64>, z: u64, n: u32) -> Self {
        let mut all = xs.clone();
        all.push(z);
        let setwise_coprime = arith::is_coprime(&all, CoprimeMode::Setwise).unwrap_or(false);
        let pairwise_coprime = arith::is_coprime(&all, CoprimeMode::Pairwise).unwrap_or(false);
        PowerSumSolution {
            k: xs.len(),
            n,
            xs,
            z,
            setwise_coprime,
            pairwise_coprime,
        }
    }

    /// Ascending `z`, then lexicographic `xs`.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.z, &self.xs).cmp(&(other.n, other.z, &other.xs))
    }
}

impl fmt::Display for PowerSumSolution {
    /// Bases then `z`, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.xs {
            write!(f, "{x} ")?;
        }
        write!(f, "{}", self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_values() {
        assert_eq!(g(2).unwrap(), 6);
        assert_eq!(g(3).unwrap(), 8);
        assert_eq!(g(10).unwrap(), 22);
        assert!(g(1).is_err());
    }

    #[test]
    fn check_examples() {
        assert!(check_solution(&[3, 4, 5], 6, 3));
        assert!(!check_solution(&[1, 2], 2, 3));
        assert!(check_solution(&[27, 84, 110, 133], 144, 5));
        assert!(!check_solution(&[], 1, 2));
    }

    #[test]
    fn solution_flags() {
        let s = PowerSumSolution::new(vec![5, 3, 4], 6, 3).unwrap();
        assert_eq!(s.xs, vec![3, 4, 5]);
        assert!(s.setwise_coprime);
        assert!(!s.pairwise_coprime);
        assert_eq!(s.to_string(), "3 4 5 6");
        let d = PowerSumSolution::new(vec![6, 8, 10], 12, 3).unwrap();
        assert!(!d.setwise_coprime);
        assert!(!SolutionFilter::Setwise.accepts(&d));
        assert!(SolutionFilter::All.accepts(&d));
        assert!(matches!(
            PowerSumSolution::new(vec![1, 2], 2, 3),
            Err(Error::NotASolution { .. })
        ));
    }

    #[test]
    fn filter_parse() {
        assert_eq!("all".parse::<SolutionFilter>().unwrap(), SolutionFilter::All);
        assert_eq!("pairwise".parse::<SolutionFilter>().unwrap(), SolutionFilter::Pairwise);
        assert!("some".parse::<SolutionFilter>().is_err());
    }
}
