//! Criterion benchmarks for `springer-core`; see `benches/`.
