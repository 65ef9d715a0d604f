//! Benchmarks for the `semiorder` crate; see `benches/`.
