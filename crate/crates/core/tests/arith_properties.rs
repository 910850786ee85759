use genabc_core::arith::{self, Factorizer};
use num_integer::Integer;
use proptest::prelude::*;

/// Radical by plain trial division.
fn naive_radical(mut n: u64) -> u64 {
    let mut rad = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            rad *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
}

fn is_squarefree(n: u64) -> bool {
    arith::factorize(n).unwrap().factors.iter().all(|f| f.exponent == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn factorization_roundtrip(n in 1u64..10_000_000_000) {
        let f = arith::factorize(n).unwrap();
        prop_assert_eq!(f.product(), Some(n));
        prop_assert!(f.factors.windows(2).all(|w| w[0].prime < w[1].prime));
        prop_assert!(f.factors.iter().all(|pp| pp.exponent >= 1 && arith::is_prime(pp.prime)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn radical_shape(n in 1u64..1_000_000_000_000) {
        let r = arith::radical(n).unwrap();
        prop_assert_eq!(n % r, 0);
        prop_assert!(is_squarefree(r));
        prop_assert_eq!(arith::radical(r).unwrap(), r);
    }

    #[test]
    fn radical_matches_trial_division(n in 1u64..100_000_000) {
        prop_assert_eq!(arith::radical(n).unwrap(), naive_radical(n));
    }

    #[test]
    fn radical_multiplicative(m in 1u64..1_000_000, mut n in 1u64..1_000_000) {
        // Strip shared primes from n.
        loop {
            let g = m.gcd(&n);
            if g == 1 {
                break;
            }
            n /= g;
        }
        prop_assert_eq!(arith::radical(m * n).unwrap(), arith::radical(m).unwrap() * arith::radical(n).unwrap());
    }

    #[test]
    fn radical_of_power_is_radical_of_base(x in 1u64..1_000_000, n in 2u32..=10) {
        let repeated = vec![x; n as usize];
        let via_set = arith::radical_of_set(&repeated).unwrap();
        prop_assert_eq!(via_set, arith::radical(x).unwrap() as u128);
        // Cross-check on the power itself when it is factorizable.
        let p = arith::big_pow(x, n);
        if let Ok(p) = u64::try_from(&p) {
            if p < arith::FACTOR_LIMIT {
                prop_assert_eq!(arith::radical(p).unwrap() as u128, via_set);
            }
        }
    }

    #[test]
    fn radical_of_set_matches_product(values in prop::collection::vec(1u64..2_000, 1..5)) {
        let product: u64 = values.iter().product();
        prop_assume!(product < 1_000_000_000_000);
        prop_assert_eq!(arith::radical_of_set(&values).unwrap(), naive_radical(product) as u128);
    }

    #[test]
    fn large_inputs_factor_exactly(n in (1u64 << 40)..(1u64 << 63)) {
        let f = arith::factorize(n).unwrap();
        prop_assert_eq!(f.product(), Some(n));
        prop_assert!(f.factors.iter().all(|pp| arith::is_prime(pp.prime)));
    }
}

#[test]
fn sieve_size_does_not_change_results() {
    let tiny = Factorizer::new(1_000);
    let big = Factorizer::new(1 << 22);
    let mut x = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..2_000 {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        let n = x % 10_000_000_000 + 1;
        assert_eq!(tiny.factorize(n).unwrap(), big.factorize(n).unwrap());
    }
}
