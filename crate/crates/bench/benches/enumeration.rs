use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hilbert_core::enumeration::{canonical_form, enumerate_raw};
use hilbert_core::{enumerate_algebras, verify, Suite};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [4, 5] {
        group.bench_with_input(BenchmarkId::new("raw", n), &n, |b, &n| b.iter(|| enumerate_raw(black_box(n))));
        group.bench_with_input(BenchmarkId::new("catalog", n), &n, |b, &n| {
            b.iter(|| enumerate_algebras(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let algs = enumerate_raw(5);
    c.bench_function("canonical_form/n5-raw", |b| {
        b.iter(|| algs.iter().map(|a| canonical_form(black_box(a)).len()).sum::<usize>())
    });
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for n in [4, 5] {
        let named = enumerate_algebras(n).unwrap().named();
        group.bench_with_input(BenchmarkId::new("all-suites", n), &named, |b, named| {
            b.iter(|| verify(black_box(named), &Suite::ALL))
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, canonical, verification);
criterion_main!(benches);
