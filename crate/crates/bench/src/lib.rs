//! Criterion benchmarks for the spectral solver, the finite-difference
//! oracle and the Poisson-kernel scan. Run with `cargo bench -p chanflow-bench`.
