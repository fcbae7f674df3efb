use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hecke_core::braid::{braid_trace, weaving_braid, weaving_trace_with};
use hecke_core::invariants::{jones, khovanov};
use hecke_core::{HeckeAlgebra, WeavingSpec};

fn weaving_traces(c: &mut Criterion) {
    let mut g = c.benchmark_group("weaving_trace");
    for (nn, m) in [(3, 12), (4, 8), (5, 5), (6, 4)] {
        let spec = WeavingSpec::new(nn, m).unwrap();
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("W({nn},{m})")),
            &spec,
            |b, spec| {
                // fresh algebra each time so memo tables are part of the cost
                b.iter(|| weaving_trace_with(&HeckeAlgebra::new(spec.n), black_box(spec)).unwrap())
            },
        );
    }
    g.finish();
}

fn generic_braid_path(c: &mut Criterion) {
    let spec = WeavingSpec::new(4, 4).unwrap();
    let word = weaving_braid(&spec);
    let mut g = c.benchmark_group("W(4,4)");
    g.bench_function("weaving recursion", |b| {
        b.iter(|| weaving_trace_with(&HeckeAlgebra::new(spec.n), black_box(&spec)).unwrap())
    });
    g.bench_function("generic braid", |b| {
        b.iter(|| braid_trace(&HeckeAlgebra::new(word.n()), black_box(&word)).unwrap())
    });
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let spec = WeavingSpec::new(5, 3).unwrap();
    c.bench_function("jones W(5,3)", |b| {
        b.iter(|| jones(black_box(&spec)).unwrap())
    });
    c.bench_function("khovanov W(5,3)", |b| {
        b.iter(|| khovanov(black_box(&spec)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = weaving_traces, generic_braid_path, invariants
}
criterion_main!(benches);
