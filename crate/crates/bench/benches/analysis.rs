use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use subdivide_core::analysis::{
    bell_intervals, continuity_intervals, gibbs_intervals, reproduction_degree,
};

fn continuity(c: &mut Criterion) {
    let mut group = c.benchmark_group("continuity");
    group.sample_size(10);
    for levels in 1..=2 {
        for n in 1..=3 {
            group.bench_with_input(BenchmarkId::new(format!("L{levels}"), n), &n, |b, &n| {
                b.iter(|| continuity_intervals(black_box(n), levels).unwrap())
            });
        }
    }
    group.finish();
}

fn gibbs(c: &mut Criterion) {
    let mut group = c.benchmark_group("gibbs");
    for k in 0..=3 {
        group.bench_with_input(BenchmarkId::new("n3", k), &k, |b, &k| {
            b.iter(|| gibbs_intervals(3, black_box(k)).unwrap())
        });
    }
    group.finish();
}

fn small_analyses(c: &mut Criterion) {
    c.bench_function("bell n=3", |b| {
        b.iter(|| bell_intervals(black_box(3)).unwrap())
    });
    c.bench_function("reproduction n=4", |b| {
        b.iter(|| reproduction_degree(black_box(4)).unwrap())
    });
}

criterion_group!(benches, continuity, gibbs, small_analyses);
criterion_main!(benches);
