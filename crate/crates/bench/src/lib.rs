//! Criterion benchmarks for the searches; see `benches/`.
