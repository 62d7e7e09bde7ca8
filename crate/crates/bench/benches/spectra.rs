use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spiralbox::fdsolver::{discretize, eigenvalues_lowest, inverse_square};
use spiralbox::polyene::{lambda_model, reference_polyenes};
use spiralbox::quantum::spiral_box_spectrum;
use spiralbox::specfun::{bessel_j, bessel_j_zeros};

fn bessel(c: &mut Criterion) {
    let mut group = c.benchmark_group("bessel_j");
    for (nu, x) in [(0.5, 3.0), (7.88987, 20.0), (23.5649, 35.0)] {
        group.bench_with_input(BenchmarkId::from_parameter(nu), &(nu, x), |b, &(nu, x)| b.iter(|| bessel_j(black_box(nu), black_box(x))));
    }
    group.finish();

    let mut group = c.benchmark_group("bessel_zeros_8");
    for nu in [0.5, 7.88987, 23.5649] {
        group.bench_with_input(BenchmarkId::from_parameter(nu), &nu, |b, &nu| b.iter(|| bessel_j_zeros(black_box(nu), 8)));
    }
    group.finish();
}

fn spectrum(c: &mut Criterion) {
    let deca = &reference_polyenes()[0];
    c.bench_function("spiral_box_spectrum_5", |b| b.iter(|| spiral_box_spectrum(black_box(0.0632), 21.0, 1.0, 5)));
    c.bench_function("lambda_model_deca", |b| b.iter(|| lambda_model(black_box(0.0632), deca, 1.0)));
}

fn finite_difference(c: &mut Criterion) {
    let mut group = c.benchmark_group("fd_lowest_3");
    group.sample_size(20);
    for n in [1_000usize, 10_000] {
        let op = discretize(inverse_square(7.88987f64.powi(2) - 0.25), 1.0, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &op, |b, op| b.iter(|| eigenvalues_lowest(op, 3)));
    }
    group.finish();
}

criterion_group!(benches, bessel, spectrum, finite_difference);
criterion_main!(benches);
