use genabc_core::arith::CoprimeMode;
use genabc_core::tuples::{
    enumerate_tuples, exceeds_radical_power, hunt_high_quality, quality, quality_exceeds, Epsilon, TupleSearch,
    Verdict,
};
use genabc_core::WorkerPool;
use num_integer::Integer;

#[test]
fn bound_one_and_three_agree_exhaustively() {
    for k in [2, 3] {
        for mode in [CoprimeMode::Setwise, CoprimeMode::Pairwise] {
            for eps in [0.0, 0.2, 1.0] {
                let eps = Epsilon::new(eps).unwrap();
                let mut checked = 0;
                for t in enumerate_tuples(k, 500, mode).unwrap() {
                    let one = exceeds_radical_power(t.sum_b, t.radical_r, eps);
                    let three = quality_exceeds(&t, eps);
                    assert_eq!(one, three, "{t} at ε = {eps}");
                    // And against plain floating point away from the boundary.
                    let q = t.quality_q;
                    let plain = q > 1.0 + eps.value();
                    if one != Verdict::Borderline && (q - 1.0 - eps.value()).abs() > 1e-9 {
                        assert_eq!(one == Verdict::Above, plain, "{t}");
                    }
                    checked += 1;
                }
                assert!(checked > 0);
            }
        }
    }
}

#[test]
fn pair_count_matches_double_loop() {
    for n in [2u64, 3, 10, 97, 500] {
        let mut direct = 0;
        for b in 2..=n {
            for a1 in 1..=b / 2 {
                if a1.gcd(&(b - a1)) == 1 {
                    direct += 1;
                }
            }
        }
        assert_eq!(enumerate_tuples(2, n, CoprimeMode::Setwise).unwrap().count(), direct, "b_max = {n}");
    }
}

#[test]
fn triple_count_matches_triple_loop() {
    let n = 120u64;
    let mut direct = 0;
    for b in 3..=n {
        for a1 in 1..=b {
            for a2 in a1..=b {
                if a1 + a2 >= b {
                    break;
                }
                let a3 = b - a1 - a2;
                if a3 >= a2 && a1.gcd(&a2).gcd(&a3) == 1 {
                    direct += 1;
                }
            }
        }
    }
    assert_eq!(enumerate_tuples(3, n, CoprimeMode::Setwise).unwrap().count(), direct);
}

#[test]
fn quality_is_base_invariant() {
    for t in enumerate_tuples(3, 200, CoprimeMode::Setwise).unwrap() {
        let ln = (t.sum_b as f64).ln() / (t.radical_r as f64).ln();
        let lg = (t.sum_b as f64).log10() / (t.radical_r as f64).log10();
        let l2 = (t.sum_b as f64).log2() / (t.radical_r as f64).log2();
        assert!(((ln - lg) / ln).abs() <= 1e-12, "{t}");
        assert!(((ln - l2) / ln).abs() <= 1e-12, "{t}");
        assert_eq!(t.quality_q, quality(&t.parts, t.sum_b).unwrap());
    }
}

#[test]
fn stream_is_strictly_canonical() {
    for k in [2, 3, 4] {
        let all: Vec<_> = enumerate_tuples(k, 150, CoprimeMode::Setwise).unwrap().collect();
        for w in all.windows(2) {
            assert!(w[0].canonical_cmp(&w[1]).is_lt(), "{} !< {}", w[0], w[1]);
        }
        for t in &all {
            assert_eq!(t.parts.iter().sum::<u64>(), t.sum_b);
            assert!(t.parts.windows(2).all(|w| w[0] <= w[1]));
            assert!(t.radical_r >= 2 && t.quality_q > 0.0);
        }
    }
}

#[test]
fn range_iteration_partitions_the_stream() {
    let search = TupleSearch::new(3, 90, CoprimeMode::Setwise).unwrap();
    let whole: Vec<_> = search.iter().collect();
    let mut pieces: Vec<_> = search.iter_range(0..=40).collect();
    pieces.extend(search.iter_range(41..=90));
    assert_eq!(whole, pieces);
}

#[test]
fn identical_results_across_worker_counts() {
    let serial = hunt_high_quality(2, 3_000, Epsilon::Integer(0), CoprimeMode::Setwise, &WorkerPool::serial()).unwrap();
    for workers in [2, 3, 8] {
        let pool = WorkerPool::new(workers);
        let parallel = hunt_high_quality(2, 3_000, Epsilon::Integer(0), CoprimeMode::Setwise, &pool).unwrap();
        assert_eq!(format!("{serial:?}"), format!("{parallel:?}"));
    }
    let real = |w| {
        hunt_high_quality(3, 150, Epsilon::Real(0.2), CoprimeMode::Pairwise, &WorkerPool::new(w)).unwrap()
    };
    assert_eq!(real(1), real(5));
}

#[test]
fn hunt_ranking_and_ties() {
    let h = hunt_high_quality(3, 60, Epsilon::Integer(0), CoprimeMode::Setwise, &WorkerPool::new(2)).unwrap();
    for w in h.hits.windows(2) {
        assert!(w[0].rank_cmp(&w[1]).is_lt());
    }
    // (1,1,16;18) and (1,8,9;18) share b and radical, so they tie on quality.
    let i = h.hits.iter().position(|t| t.parts == [1, 1, 16]).unwrap();
    assert_eq!(h.hits[i + 1].parts, vec![1, 8, 9]);
}
