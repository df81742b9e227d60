use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use lts_bench::mixed_catalog;
use lts_core::catalog::entry;
use lts_core::classify::{fingerprint, isomorphic, DEFAULT_BUDGET};
use lts_core::embed::standard_embedding;
use std::hint::black_box;

fn axioms(c: &mut Criterion) {
    let systems = mixed_catalog();
    c.bench_function("check_axioms/catalog", |b| {
        b.iter(|| {
            for (_, t) in &systems {
                black_box(t.check_axioms()).unwrap();
            }
        })
    });
}

fn embedding(c: &mut Criterion) {
    let systems = mixed_catalog();
    c.bench_function("standard_embedding/catalog", |b| {
        b.iter(|| {
            for (_, t) in &systems {
                black_box(standard_embedding(t).unwrap());
            }
        })
    });
    let embs: Vec<_> = systems.iter().map(|(_, t)| standard_embedding(t).unwrap()).collect();
    c.bench_function("lie_to_lts/catalog", |b| {
        b.iter(|| {
            for e in &embs {
                black_box(e.algebra.lie_to_lts(&e.grading).unwrap());
            }
        })
    });
}

fn fingerprints(c: &mut Criterion) {
    let systems = mixed_catalog();
    c.bench_function("fingerprint/catalog", |b| {
        b.iter(|| {
            for (_, t) in &systems {
                black_box(fingerprint(t).unwrap());
            }
        })
    });
}

fn iso_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("isomorphic");
    group.sample_size(10);
    for (a, b) in [("dim3-III+", "dim3-IV+"), ("split-5", "split-6")] {
        let (ta, tb) = (entry(a).unwrap().system, entry(b).unwrap().system);
        group.bench_function(format!("{a}~{b}"), |bench| {
            bench.iter_batched(
                || (ta.clone(), tb.clone()),
                |(x, y)| black_box(isomorphic(&x, &y, DEFAULT_BUDGET).unwrap()),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, axioms, embedding, fingerprints, iso_search);
criterion_main!(benches);
