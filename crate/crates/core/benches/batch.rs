use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supm::arith::GR;
use supm::critical::analyze;
use supm::lemmas::verify_lemma_3_1;
use supm::par;
use supm::poly::{bivariate_resultant_by_interpolation, bivariate_resultant_in_w, Poly};
use supm::report::{run_check, CheckOptions};

fn random_gr(rng: &mut ChaCha8Rng, span: i64, den: i64) -> GR {
    GR::complex(
        rng.gen_range(-span..=span),
        rng.gen_range(1..=den),
        rng.gen_range(-span..=span),
        rng.gen_range(1..=den),
    )
}

/// `P' = prod (z - r_j)^(e_j)` with `sum e_j = degree - 1`, plus a random constant.
fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let mut profile: Vec<(GR, usize)> = Vec::new();
    let mut left = degree - 1;
    while left > 0 {
        let e = rng.gen_range(1..=left.min(3));
        let r = random_gr(rng, 3, 2);
        if profile.iter().all(|(s, _)| *s != r) {
            profile.push((r, e));
            left -= e;
        }
    }
    let dp = Poly::from_roots(profile.iter().map(|(r, e)| (r, *e)));
    &dp.integral() + &Poly::constant(random_gr(rng, 5, 3))
}

fn batch(size: usize) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..size).map(|i| random_poly(&mut rng, 6 + i % 5)).collect()
}

fn certify_batch(c: &mut Criterion) {
    let polys = batch(32);
    let options = CheckOptions::default();
    let mut group = c.benchmark_group("certify_batch");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| par::map(black_box(&polys), |p| run_check(p, &options).map(|r| r.exit_code)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_seq(black_box(&polys), |p| run_check(p, &options).map(|r| r.exit_code)))
    });
    group.finish();
}

fn analyze_batch(c: &mut Criterion) {
    let polys = batch(64);
    let mut group = c.benchmark_group("analyze_batch");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| par::map(black_box(&polys), |p| analyze(p).is_ok()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_seq(black_box(&polys), |p| analyze(p).is_ok()))
    });
    group.finish();
}

fn lemma_grid(c: &mut Criterion) {
    let grid: Vec<(usize, GR)> = (5..=10)
        .flat_map(|n| [(1, 3), (1, 2), (2, 3), (3, 2), (2, 1)].map(|(a, b)| (n, GR::ratio(a, b))))
        .collect();
    let mut group = c.benchmark_group("lemma_grid");
    group.bench_function("parallel", |b| {
        b.iter(|| par::map(black_box(&grid), |(n, a)| verify_lemma_3_1(*n, a).is_ok()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_seq(black_box(&grid), |(n, a)| verify_lemma_3_1(*n, a).is_ok()))
    });
    group.finish();
}

/// Critical-value eliminant: companion characteristic polynomial against
/// evaluation and interpolation (whose evaluations go through `par::map`).
fn eliminant(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut group = c.benchmark_group("eliminant");
    group.sample_size(10);
    for degree in [6usize, 10] {
        let p = random_poly(&mut rng, degree);
        let dp = p.derivative();
        group.bench_with_input(BenchmarkId::new("charpoly", degree), &(&dp, &p), |b, (f, p)| {
            b.iter(|| bivariate_resultant_in_w(f, p))
        });
        group.bench_with_input(BenchmarkId::new("interpolation", degree), &(&dp, &p), |b, (f, p)| {
            b.iter(|| bivariate_resultant_by_interpolation(f, p))
        });
    }
    group.finish();
}

criterion_group!(benches, certify_batch, analyze_batch, lemma_grid, eliminant);
criterion_main!(benches);
