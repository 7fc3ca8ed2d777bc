//! Benchmark-only crate; see `benches/forge.rs` for the criterion suites.
