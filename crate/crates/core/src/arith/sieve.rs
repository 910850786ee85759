//! Smallest-prime-factor table.

/// Linear sieve storing the smallest prime factor of every integer below
/// `bound`. Immutable once built, so it can be shared freely between threads.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl SpfSieve {
    /// Builds the table for `0..bound`. Entries 0 and 1 hold 0.
    ///
    /// `bound` is clamped to `2^32` since factors are stored as `u32`.
    pub fn new(bound: u64) -> Self {
        let bound = bound.clamp(2, 1 << 32) as usize;
        let mut spf = vec![0u32; bound];
        let mut primes = Vec::new();
        for i in 2..bound {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m >= bound {
                    break;
                }
                spf[m] = p;
            }
        }
        SpfSieve { spf, primes }
    }

    /// Exclusive upper bound of the table.
    pub fn bound(&self) -> u64 {
        self.spf.len() as u64
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Smallest prime factor of `n`, or `None` when `n < 2` or `n` is past
    /// the table.
    #[inline]
    pub fn smallest_factor(&self, n: u64) -> Option<u64> {
        match self.spf.get(n as usize) {
            Some(&p) if p != 0 => Some(p as u64),
            _ => None,
        }
    }

    #[inline]
    pub fn contains(&self, n: u64) -> bool {
        n < self.bound()
    }

    /// Radical of every integer in `0..limit`, with `rad(0) = 0` and
    /// `rad(1) = 1`. `limit` must not exceed the sieve bound.
    pub fn radical_table(&self, limit: u64) -> Vec<u64> {
        assert!(limit <= self.bound(), "radical table past sieve bound");
        let limit = limit as usize;
        let mut rad = vec![0u64; limit];
        if limit > 1 {
            rad[1] = 1;
        }
        for n in 2..limit {
            let p = self.spf[n] as usize;
            let m = n / p;
            rad[n] = if m.is_multiple_of(p) { rad[m] } else { rad[m] * p as u64 };
        }
        rad
    }
}
