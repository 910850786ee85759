//! Exact integer kernel: factorization, radicals, coprimality and
//! arbitrary-precision powers.
//!
//! Small inputs are factored from a smallest-prime-factor table. Inputs past
//! the table fall back to trial division by tiny primes and then Pollard rho
//! with a deterministic Miller-Rabin test, which covers everything below
//! `2^63`.

mod rho;
mod sieve;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use rho::is_prime;
pub use sieve::SpfSieve;

use crate::error::{Error, Result};

/// Exclusive upper bound on factorizable inputs.
pub const FACTOR_LIMIT: u64 = 1 << 63;

/// Table size of the process-wide factorizer used by the free functions.
pub const DEFAULT_SIEVE_BOUND: u64 = 1 << 22;

/// Trial division stops at this prime before switching to rho.
const TRIAL_LIMIT: u64 = 1 << 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// Prime decomposition of `value`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|f| f.prime)
    }

    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    /// Multiplies the factors back out, `None` on overflow.
    pub fn product(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, f| {
            f.prime.checked_pow(f.exponent).and_then(|pp| acc.checked_mul(pp))
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if pp.exponent == 1 {
                write!(f, "{}", pp.prime)?;
            } else {
                write!(f, "{}^{}", pp.prime, pp.exponent)?;
            }
        }
        Ok(())
    }
}

/// Which notion of "coprime" a collection must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoprimeMode {
    /// The gcd of all members is 1.
    #[default]
    Setwise,
    /// Every pair of members has gcd 1.
    Pairwise,
}

impl CoprimeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CoprimeMode::Setwise => "setwise",
            CoprimeMode::Pairwise => "pairwise",
        }
    }
}

impl fmt::Display for CoprimeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CoprimeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "setwise" => Ok(CoprimeMode::Setwise),
            "pairwise" => Ok(CoprimeMode::Pairwise),
            other => Err(Error::domain(format!("unknown coprimality mode {other:?}"))),
        }
    }
}

/// Factorization engine backed by a smallest-prime-factor table.
#[derive(Debug, Clone)]
pub struct Factorizer {
    sieve: SpfSieve,
}

impl Factorizer {
    pub fn new(sieve_bound: u64) -> Self {
        Factorizer {
            sieve: SpfSieve::new(sieve_bound),
        }
    }

    /// Process-wide instance with a [`DEFAULT_SIEVE_BOUND`] table, built on
    /// first use.
    pub fn shared() -> &'static Factorizer {
        static SHARED: OnceLock<Factorizer> = OnceLock::new();
        SHARED.get_or_init(|| Factorizer::new(DEFAULT_SIEVE_BOUND))
    }

    pub fn sieve(&self) -> &SpfSieve {
        &self.sieve
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        check_domain(n)?;
        let mut primes = Vec::with_capacity(16);
        self.collect_primes(n, &mut primes);
        primes.sort_unstable();
        let mut factors: Vec<PrimePower> = Vec::new();
        for p in primes {
            match factors.last_mut() {
                Some(last) if last.prime == p => last.exponent += 1,
                _ => factors.push(PrimePower { prime: p, exponent: 1 }),
            }
        }
        Ok(Factorization { value: n, factors })
    }

    pub fn radical(&self, n: u64) -> Result<u64> {
        check_domain(n)?;
        if self.sieve.contains(n) {
            return Ok(self.sieve_radical(n));
        }
        Ok(self.factorize(n)?.radical())
    }

    /// Radical of the product of `values`, computed without forming the
    /// product: radicals are squarefree, so the radical of a product is the
    /// lcm of the radicals.
    pub fn radical_of_set(&self, values: &[u64]) -> Result<u128> {
        if values.is_empty() {
            return Err(Error::domain("radical_of_set needs at least one value"));
        }
        values.iter().try_fold(1u128, |acc, &v| {
            let r = self.radical(v)? as u128;
            let g = acc.gcd(&r);
            (acc / g)
                .checked_mul(r)
                .ok_or(Error::Overflow("radical exceeds 128 bits"))
        })
    }

    fn sieve_radical(&self, mut n: u64) -> u64 {
        let mut rad = 1;
        while let Some(p) = self.sieve.smallest_factor(n) {
            rad *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        rad
    }

    /// Pushes every prime factor of `n` with multiplicity, unordered.
    fn collect_primes(&self, mut n: u64, out: &mut Vec<u64>) {
        if n < 2 {
            return;
        }
        if self.sieve.contains(n) {
            while let Some(p) = self.sieve.smallest_factor(n) {
                out.push(p);
                n /= p;
            }
            return;
        }
        for &p in self.sieve.primes() {
            let p = p as u64;
            if p > TRIAL_LIMIT || p * p > n {
                break;
            }
            while n.is_multiple_of(p) {
                out.push(p);
                n /= p;
            }
        }
        self.split_large(n, out);
    }

    fn split_large(&self, n: u64, out: &mut Vec<u64>) {
        if n < 2 {
            return;
        }
        if self.sieve.contains(n) {
            return self.collect_primes(n, out);
        }
        if n.is_multiple_of(2) {
            out.push(2);
            return self.split_large(n / 2, out);
        }
        if is_prime(n) {
            out.push(n);
            return;
        }
        let d = rho::find_divisor(n);
        self.split_large(d, out);
        self.split_large(n / d, out);
    }
}

fn check_domain(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::domain("0 has no prime factorization"))
    } else if n >= FACTOR_LIMIT {
        Err(Error::domain(format!("{n} is not below 2^63")))
    } else {
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    Factorizer::shared().factorize(n)
}

/// Product of the distinct primes dividing `n`; `radical(1) == 1`.
pub fn radical(n: u64) -> Result<u64> {
    Factorizer::shared().radical(n)
}

/// `radical(values[0] * values[1] * ...)` without overflow on the product.
pub fn radical_of_set(values: &[u64]) -> Result<u128> {
    Factorizer::shared().radical_of_set(values)
}

pub fn gcd_all(values: &[u64]) -> Result<u64> {
    check_positive(values)?;
    Ok(values.iter().fold(0u64, |g, v| g.gcd(v)))
}

pub fn is_coprime(values: &[u64], mode: CoprimeMode) -> Result<bool> {
    check_positive(values)?;
    Ok(match mode {
        CoprimeMode::Setwise => values.iter().fold(0u64, |g, v| g.gcd(v)) == 1,
        CoprimeMode::Pairwise => values
            .iter()
            .enumerate()
            .all(|(i, a)| values[i + 1..].iter().all(|b| a.gcd(b) == 1)),
    })
}

fn check_positive(values: &[u64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::domain("expected a nonempty list"));
    }
    if values.contains(&0) {
        return Err(Error::domain("values must be positive"));
    }
    Ok(())
}

/// Exact `x^n`.
pub fn big_pow(x: u64, n: u32) -> BigUint {
    num_traits::pow::Pow::pow(BigUint::from(x), n)
}
