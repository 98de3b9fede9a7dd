//! Criterion benchmarks for `polycode`; see `benches/`.
