use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liecap::capability::{consistency_triangle, noncapable_census};
use liecap::catalog::{build, default_epsilons, list_up_to};
use liecap::covers::exterior_cover;
use liecap::homology::multiplier_dim;
use liecap::par::{self, Execution};
use liecap::report::{run_suite, VerifyOptions};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn sweeps(c: &mut Criterion) {
    let eps = default_epsilons();
    let algebras: Vec<_> = list_up_to(6, &eps).unwrap().iter().map(|k| build(k).unwrap().algebra).collect();

    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("multipliers", name), &exec, |b, &exec| {
            b.iter(|| par::map(exec, &algebras, |l| multiplier_dim(black_box(l))))
        });
        g.bench_with_input(BenchmarkId::new("covers", name), &exec, |b, &exec| {
            b.iter(|| par::map(exec, &algebras, |l| exterior_cover(black_box(l)).unwrap().star.dim()))
        });
        g.bench_with_input(BenchmarkId::new("triangle", name), &exec, |b, &exec| {
            b.iter(|| par::map(exec, &algebras, |l| consistency_triangle(black_box(l)).unwrap().len()))
        });
        g.bench_with_input(BenchmarkId::new("census", name), &exec, |b, &exec| {
            b.iter(|| noncapable_census(6, &eps, exec).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = VerifyOptions { exec, ..VerifyOptions::default() };
        for suite in ["exterior6", "kunneth"] {
            g.bench_with_input(BenchmarkId::new(suite, name), &opts, |b, opts| {
                b.iter(|| run_suite(suite, opts).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
