//! Criterion benchmarks for `schurcalc`; see `benches/`.
