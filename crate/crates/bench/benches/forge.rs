//! Criterion suites for the compute-heavy paths: exact row construction,
//! single-prime verification, the scans, and identity residuals.
//!
//! Bernoulli numbers are memoized in a process-wide table, so every suite
//! warms the table up front and the numbers below measure warm-table
//! performance — the steady state a long verification run actually sees.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use congruence_forge_core::bernoulli::{bernoulli, divided_bernoulli};
use congruence_forge_core::convolutions::{identity_residual, Identity};
use congruence_forge_core::mhs::{mhs_row_newton, mhs_row_poly_oracle};
use congruence_forge_core::padic_roots::lift_roots;
use congruence_forge_core::search::{irregular_pairs, kummer_pairs, wilson_scan};
use congruence_forge_core::stirling::stirling_row_exact;
use congruence_forge_core::sums::harmonic_power_sums_upto;
use congruence_forge_core::verifier::{run_checks, RunOptions};

/// Computes every Bernoulli number the suites touch, so no measurement
/// pays the one-time table build.
fn warm_tables() {
    bernoulli(416).expect("table cap should cover the warmup");
}

fn bench_rows(c: &mut Criterion) {
    warm_tables();
    c.bench_function("stirling_row_exact/101", |b| {
        b.iter(|| stirling_row_exact(black_box(101)).unwrap())
    });
    c.bench_function("mhs_row_newton/61", |b| {
        b.iter(|| mhs_row_newton(black_box(61)).unwrap())
    });
    c.bench_function("mhs_row_poly_oracle/61", |b| {
        b.iter(|| mhs_row_poly_oracle(black_box(61)).unwrap())
    });
    c.bench_function("harmonic_power_sums_upto/101", |b| {
        b.iter(|| harmonic_power_sums_upto(black_box(101), black_box(100)))
    });
    c.bench_function("lift_roots/101", |b| {
        b.iter(|| lift_roots(black_box(101)).unwrap())
    });
    c.bench_function("divided_bernoulli_lookup/200", |b| {
        b.iter(|| divided_bernoulli(black_box(200)).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    warm_tables();
    let options = RunOptions {
        jobs: Some(1),
        ..RunOptions::default()
    };
    c.bench_function("run_checks/7", {
        let options = options.clone();
        move |b| b.iter(|| run_checks(black_box(&[7]), &options).unwrap())
    });
    let mut slow = c.benchmark_group("run_checks");
    slow.sample_size(10);
    slow.bench_function("31", {
        let options = options.clone();
        move |b| b.iter(|| run_checks(black_box(&[31]), &options).unwrap())
    });
    slow.finish();
}

fn bench_search(c: &mut Criterion) {
    warm_tables();
    c.bench_function("wilson_scan/10000", |b| {
        b.iter(|| wilson_scan(black_box(10_000)))
    });
    c.bench_function("kummer_pairs/101", |b| {
        b.iter(|| kummer_pairs(black_box(101)).unwrap())
    });
    c.bench_function("irregular_pairs/101", |b| {
        b.iter(|| irregular_pairs(black_box(101)).unwrap())
    });
}

fn bench_identities(c: &mut Criterion) {
    warm_tables();
    c.bench_function("identity_residual/miki_60", |b| {
        b.iter(|| identity_residual(black_box(Identity::Miki { n: 60 })).unwrap())
    });
    c.bench_function("identity_residual/spivey_100", |b| {
        b.iter(|| identity_residual(black_box(Identity::Spivey { n: 100 })).unwrap())
    });
}

criterion_group!(rows, bench_rows);
criterion_group!(verify, bench_verify);
criterion_group!(search, bench_search);
criterion_group!(identities, bench_identities);
criterion_main!(rows, verify, search, identities);
