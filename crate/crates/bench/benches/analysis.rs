use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use horton::analysis::{count_empty_triangles, is_horton, largest_empty_hole, order_type};
use horton::construct::small_horton;
use horton::lowerbound::lower_bound_report;

fn analysis_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("analysis");
    group.sample_size(10);
    for k in [5u32, 6, 7] {
        let s = small_horton(k).unwrap();
        group.bench_with_input(BenchmarkId::new("is_horton", k), &s, |b, s| b.iter(|| is_horton(black_box(s))));
        group.bench_with_input(BenchmarkId::new("order_type", k), &s, |b, s| b.iter(|| order_type(black_box(s))));
        group.bench_with_input(BenchmarkId::new("empty_triangles", k), &s, |b, s| {
            b.iter(|| count_empty_triangles(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("largest_hole", k), &s, |b, s| {
            b.iter(|| largest_empty_hole(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("lower_bound_report", k), &s, |b, s| {
            b.iter(|| lower_bound_report(black_box(s), 2))
        });
    }
    group.finish();
}

criterion_group!(benches, analysis_bench);
criterion_main!(benches);
