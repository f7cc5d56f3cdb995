//! Sequential versus rayon execution of the batch routines.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

use fh_diagram::inequalities::count_violations;
use fh_diagram::sampling::{sample_grid_with, sample_random_with};
use fh_diagram::{Execution, Triangle};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_random");
    for n in [10_000usize, 100_000] {
        group.throughput(Throughput::Elements(n as u64));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| sample_random_with(black_box(n), 42, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let triangles: Vec<Triangle> = sample_random_with(100_000, 7, Execution::default())
        .unwrap()
        .entries
        .into_iter()
        .map(|(t, _)| t)
        .collect();
    let mut group = c.benchmark_group("verify");
    group.throughput(Throughput::Elements(triangles.len() as u64));
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| count_violations(black_box(&triangles), exec))
        });
    }
    group.finish();
}

fn bench_inversion_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_grid_50x50");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| sample_grid_with(50, 50, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_sampling, bench_verify, bench_inversion_grid);
criterion_main!(benches);
