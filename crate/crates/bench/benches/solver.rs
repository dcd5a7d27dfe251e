use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use iasi_bench::workloads;
use iasi_core::solver::{phi_branch_bound, phi_exhaustive};

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi");
    for (name, g) in workloads() {
        if g.vertex_count() <= 16 {
            group.bench_with_input(BenchmarkId::new("exhaustive", &name), &g, |b, g| {
                b.iter(|| phi_exhaustive(g).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("bb", &name), &g, |b, g| {
            b.iter(|| phi_branch_bound(g, false))
        });
    }
    group.finish();
}

criterion_group!(benches, solvers);
criterion_main!(benches);
