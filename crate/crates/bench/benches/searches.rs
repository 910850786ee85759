use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use genabc_core::arith::{self, CoprimeMode, Factorizer};
use genabc_core::powersum::{Algorithm, PowerSumSearch, SolutionFilter};
use genabc_core::tuples::{Epsilon, TupleSearch};
use genabc_core::WorkerPool;

fn factorization(c: &mut Criterion) {
    let sieve = Factorizer::new(1 << 22);
    let mut group = c.benchmark_group("factorize");
    group.bench_function("sieve_range", |b| {
        b.iter(|| (1_000_000u64..1_001_000).map(|n| sieve.factorize(n).unwrap().factors.len()).sum::<usize>())
    });
    group.bench_function("rho_semiprime", |b| {
        b.iter(|| sieve.factorize(1_000_000_007 * 998_244_353).unwrap())
    });
    group.bench_function("radical_of_set", |b| {
        b.iter(|| arith::radical_of_set(&[2, 6_436_341, 6_436_343]).unwrap())
    });
    group.finish();
}

fn abc_hunt(c: &mut Criterion) {
    let pool = WorkerPool::serial();
    let mut group = c.benchmark_group("abc_hunt");
    group.sample_size(10);
    for k in [2usize, 3] {
        let b_max = if k == 2 { 2_000 } else { 300 };
        let search = TupleSearch::new(k, b_max, CoprimeMode::Setwise).unwrap();
        group.bench_with_input(BenchmarkId::new("serial", k), &search, |b, s| {
            b.iter(|| s.scan(2..=s.b_max(), Epsilon::Integer(0), &pool).hits.len())
        });
    }
    group.finish();
}

fn power_sum(c: &mut Criterion) {
    let pool = WorkerPool::serial();
    let mut group = c.benchmark_group("power_sum");
    group.sample_size(10);
    for (name, alg) in [("dfs", Algorithm::Dfs), ("mitm", Algorithm::MeetInTheMiddle)] {
        group.bench_function(name, |b| {
            b.iter(|| {
                PowerSumSearch::new(4, 3, 60, SolutionFilter::All, alg)
                    .unwrap()
                    .run(&pool)
                    .len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, factorization, abc_hunt, power_sum);
criterion_main!(benches);
