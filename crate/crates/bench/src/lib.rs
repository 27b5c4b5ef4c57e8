//! Benchmark-only crate; see `benches/reconstruction.rs`.
