//! Benchmarks for blowup-core live in `benches/engine.rs`.
