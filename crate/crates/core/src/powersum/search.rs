use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::value::PowValue;
use super::{check_solution, g, PowerSumSolution, SolutionFilter};
use crate::arith;
use crate::error::{Error, Result};
use crate::pool::WorkerPool;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    /// Descending depth-first search, constant memory per worker.
    #[default]
    Dfs,
    /// Hash table of lower-half power sums, probed with every upper half.
    MeetInTheMiddle,
}

/// A configured search for `x_1^n + ... + x_k^n = z^n` with `z <= z_max`.
#[derive(Debug)]
pub struct PowerSumSearch {
    k: usize,
    n: u32,
    z_max: u64,
    filter: SolutionFilter,
    engine: Engine,
}

#[derive(Debug)]
enum Engine {
    Native(Tables<u128>),
    Big(Tables<BigUint>),
}

impl PowerSumSearch {
    pub fn new(k: usize, n: u32, z_max: u64, filter: SolutionFilter, algorithm: Algorithm) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("k must be at least 2, got {k}")));
        }
        if n < 2 {
            return Err(Error::domain(format!("n must be at least 2, got {n}")));
        }
        if z_max < 2 {
            return Err(Error::domain(format!("z_max must be at least 2, got {z_max}")));
        }
        if z_max > u32::MAX as u64 {
            return Err(Error::domain("z_max must fit in 32 bits"));
        }
        // Every sum the searches form is at most k * z_max^n.
        let largest = arith::big_pow(z_max, n) * BigUint::from(k);
        let engine = if u128::try_from(&largest).is_ok() {
            Engine::Native(Tables::new(k, n, z_max, algorithm))
        } else {
            Engine::Big(Tables::new(k, n, z_max, algorithm))
        };
        Ok(PowerSumSearch {
            k,
            n,
            z_max,
            filter,
            engine,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn z_max(&self) -> u64 {
        self.z_max
    }

    pub fn filter(&self) -> SolutionFilter {
        self.filter
    }

    /// Whether all arithmetic runs on native `u128`.
    pub fn is_native(&self) -> bool {
        matches!(self.engine, Engine::Native(_))
    }

    /// Solutions with this exact `z`, sorted by `xs`.
    pub fn solutions_for(&self, z: u64) -> Vec<PowerSumSolution> {
        if z < 2 || z > self.z_max {
            return Vec::new();
        }
        let mut found = match &self.engine {
            Engine::Native(t) => t.solve(z),
            Engine::Big(t) => t.solve(z),
        };
        found.sort_unstable();
        found
            .into_iter()
            .map(|xs| {
                assert!(
                    check_solution(&xs, z, self.n),
                    "search emitted a non-solution {xs:?}; {z}^{}",
                    self.n
                );
                PowerSumSolution::from_verified(xs, z, self.n)
            })
            .filter(|s| self.filter.accepts(s))
            .collect()
    }

    /// Solutions with `z` in `range`, in canonical order.
    pub fn scan(&self, range: RangeInclusive<u64>, pool: &WorkerPool) -> Vec<PowerSumSolution> {
        let lo = (*range.start()).max(2);
        let hi = (*range.end()).min(self.z_max);
        let per_z: Vec<Vec<PowerSumSolution>> =
            pool.install(|| (lo..=hi).into_par_iter().map(|z| self.solutions_for(z)).collect());
        per_z.into_iter().flatten().collect()
    }

    pub fn run(&self, pool: &WorkerPool) -> Vec<PowerSumSolution> {
        self.scan(2..=self.z_max, pool)
    }
}

#[derive(Debug)]
struct Tables<V> {
    k: usize,
    /// `pows[x] = x^n` for `x` in `0..=z_max`.
    pows: Vec<V>,
    /// Lower halves keyed by their power sum; present for meet-in-the-middle.
    low: Option<LowTable<V>>,
}

#[derive(Debug)]
struct LowTable<V> {
    width: usize,
    by_sum: HashMap<V, Vec<Vec<u64>>>,
}

impl<V: PowValue> Tables<V> {
    fn new(k: usize, n: u32, z_max: u64, algorithm: Algorithm) -> Self {
        let pows: Vec<V> = (0..=z_max).map(|x| V::from_big(arith::big_pow(x, n))).collect();
        let low = match algorithm {
            Algorithm::Dfs => None,
            Algorithm::MeetInTheMiddle => Some(LowTable::build(k / 2, k - k / 2, &pows)),
        };
        Tables { k, pows, low }
    }

    fn solve(&self, z: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let target = &self.pows[z as usize];
        match &self.low {
            None => {
                let mut chosen = Vec::with_capacity(self.k);
                self.dfs(target, self.k, z - 1, &mut chosen, &mut out);
            }
            Some(low) => self.meet_in_the_middle(low, z, &mut out),
        }
        out
    }

    /// Chooses bases largest first; `chosen` is non-increasing.
    fn dfs(&self, target: &V, count: usize, cap: u64, chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let candidates = &self.pows[1..=cap as usize];
        if count == 1 {
            if let Ok(i) = candidates.binary_search(target) {
                let mut xs = chosen.clone();
                xs.push(i as u64 + 1);
                xs.reverse();
                out.push(xs);
            }
            return;
        }
        // The others are each at least 1 and at most x, so
        // x^n + (count - 1) <= target <= count * x^n.
        let rest = count as u64 - 1;
        let hi = candidates.partition_point(|p| p.add_small(rest) <= *target) as u64;
        let lo = candidates.partition_point(|p| p.mul_small(count as u64) < *target) as u64 + 1;
        for x in (lo..=hi).rev() {
            chosen.push(x);
            let remaining = target.sub(&self.pows[x as usize]);
            self.dfs(&remaining, count - 1, x, chosen, out);
            chosen.pop();
        }
    }

    fn meet_in_the_middle(&self, low: &LowTable<V>, z: u64, out: &mut Vec<Vec<u64>>) {
        let target = &self.pows[z as usize];
        let high_width = self.k - low.width;
        let mut high = Vec::with_capacity(high_width);
        self.each_high(target, low.width as u64, high_width, 1, z - 1, V::from_big(BigUint::ZERO), &mut high, &mut |high, sum| {
            let Some(lows) = low.by_sum.get(&target.sub(sum)) else {
                return;
            };
            for l in lows {
                // Sorted split point: the lower half never exceeds the upper.
                if l[l.len() - 1] <= high[0] {
                    let mut xs = l.clone();
                    xs.extend_from_slice(high);
                    out.push(xs);
                }
            }
        });
    }

    /// Visits non-decreasing `width`-tuples from `min..=max` whose power sum
    /// leaves at least `reserve` for the lower half.
    #[allow(clippy::too_many_arguments)]
    fn each_high(
        &self,
        target: &V,
        reserve: u64,
        width: usize,
        min: u64,
        max: u64,
        sum: V,
        acc: &mut Vec<u64>,
        f: &mut impl FnMut(&[u64], &V),
    ) {
        if acc.len() == width {
            f(acc, &sum);
            return;
        }
        let left = (width - acc.len()) as u64;
        for x in min..=max {
            // The remaining picks are all >= x.
            let floor = sum.add(&self.pows[x as usize].mul_small(left)).add_small(reserve);
            if floor > *target {
                break;
            }
            acc.push(x);
            let next = sum.add(&self.pows[x as usize]);
            self.each_high(target, reserve, width, x, max, next, acc, f);
            acc.pop();
        }
    }
}

impl<V: PowValue> LowTable<V> {
    fn build(width: usize, high_width: usize, pows: &[V]) -> Self {
        let max = pows.len() as u64 - 1;
        // A lower half plus the smallest possible upper half stays <= max^n.
        let ceiling = pows[max as usize].clone();
        let mut by_sum: HashMap<V, Vec<Vec<u64>>> = HashMap::new();
        let mut acc = Vec::with_capacity(width);
        #[allow(clippy::too_many_arguments)]
        fn rec<V: PowValue>(
            pows: &[V],
            width: usize,
            min: u64,
            max: u64,
            sum: V,
            reserve: u64,
            ceiling: &V,
            acc: &mut Vec<u64>,
            by_sum: &mut HashMap<V, Vec<Vec<u64>>>,
        ) {
            if acc.len() == width {
                by_sum.entry(sum).or_default().push(acc.clone());
                return;
            }
            for x in min..max {
                let next = sum.add(&pows[x as usize]);
                if next.add_small(reserve) > *ceiling {
                    break;
                }
                acc.push(x);
                rec(pows, width, x, max, next, reserve, ceiling, acc, by_sum);
                acc.pop();
            }
        }
        let zero = V::from_big(BigUint::ZERO);
        rec(pows, width, 1, max, zero, high_width as u64, &ceiling, &mut acc, &mut by_sum);
        LowTable { width, by_sum }
    }
}

/// Every solution with `z <= z_max` passing `filter`, in canonical order.
pub fn search_solutions(
    k: usize,
    n: u32,
    z_max: u64,
    filter: SolutionFilter,
    algorithm: Algorithm,
    pool: &WorkerPool,
) -> Result<Vec<PowerSumSolution>> {
    Ok(PowerSumSearch::new(k, n, z_max, filter, algorithm)?.run(pool))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerResult {
    pub n: u32,
    pub solutions: Vec<PowerSumSolution>,
}

/// Solutions found for each exponent of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfltReport {
    pub k: usize,
    /// `2k + 2`.
    pub g: u32,
    pub z_max: u64,
    pub filter: SolutionFilter,
    pub results: Vec<PowerResult>,
}

impl GfltReport {
    pub fn total(&self) -> usize {
        self.results.iter().map(|r| r.solutions.len()).sum()
    }

    /// Solutions at exponents where none are predicted to exist.
    pub fn counterexamples(&self) -> impl Iterator<Item = &PowerSumSolution> {
        self.results
            .iter()
            .filter(|r| r.n >= self.g)
            .flat_map(|r| r.solutions.iter())
    }

    pub fn has_counterexample(&self) -> bool {
        self.counterexamples().next().is_some()
    }
}

/// Searches every exponent in `n_lo..=n_hi`.
pub fn verify_gflt_range(
    k: usize,
    n_lo: u32,
    n_hi: u32,
    z_max: u64,
    filter: SolutionFilter,
    pool: &WorkerPool,
) -> Result<GfltReport> {
    let g = g(k)?;
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::domain(format!("invalid exponent range {n_lo}..={n_hi}")));
    }
    let results = (n_lo..=n_hi)
        .map(|n| {
            let search = PowerSumSearch::new(k, n, z_max, filter, Algorithm::Dfs)?;
            Ok(PowerResult {
                n,
                solutions: search.run(pool),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GfltReport {
        k,
        g,
        z_max,
        filter,
        results,
    })
}
