use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopf_bench::antipode_inputs;
use hopf_core::forest::antipode_forests_with;
use hopf_core::{ClassRegistry, ForestMode, Incidence};

fn antipode(c: &mut Criterion) {
    let mut group = c.benchmark_group("antipode");
    group.sample_size(10);
    for (name, p) in antipode_inputs() {
        group.bench_with_input(BenchmarkId::new("chains", name), &p, |b, p| {
            b.iter(|| {
                let reg = ClassRegistry::new();
                Incidence::new(p, &reg).antipode_chains()
            })
        });
        group.bench_with_input(BenchmarkId::new("forests", name), &p, |b, p| {
            b.iter(|| {
                let reg = ClassRegistry::new();
                let inc = Incidence::new(p, &reg);
                antipode_forests_with(&inc, ForestMode::for_interval(p)).unwrap()
            })
        });
    }
    group.finish();
}

fn subinterval_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("subinterval_table");
    group.sample_size(10);
    for (name, p) in antipode_inputs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| {
                let reg = ClassRegistry::new();
                Incidence::new(p, &reg).whole().clone()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, antipode, subinterval_table);
criterion_main!(benches);
