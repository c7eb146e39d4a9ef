use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopf_bench::canonical_inputs;
use hopf_core::canonical_form;

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, p) in canonical_inputs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| canonical_form(p))
        });
    }
    group.finish();
}

criterion_group!(benches, canonical);
criterion_main!(benches);
