//! Criterion benchmarks for the enumeration engine.

use std::hint::black_box;

use circmem_core::{
    enumerate_gray, enumerate_naive, enumerate_partitioned, lab::catalog_entry,
    CirculantWeightMatrix,
};
use criterion::{BenchmarkId, Criterion};

fn catalog_matrix(label: &str) -> CirculantWeightMatrix {
    CirculantWeightMatrix::new(catalog_entry(label).expect("catalog label").row)
}

pub fn benchmarks(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for label in ["10x10", "13x13", "15x15"] {
        let w = catalog_matrix(label);
        group.bench_with_input(BenchmarkId::new("naive", label), &w, |b, w| {
            b.iter(|| enumerate_naive(black_box(w)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("gray", label), &w, |b, w| {
            b.iter(|| enumerate_gray(black_box(w)).unwrap())
        });
    }
    group.finish();

    let w = catalog_matrix("15x15");
    let mut group = c.benchmark_group("partitioned-15x15");
    for k in [1, 2, 4, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| enumerate_partitioned(black_box(&w), k).unwrap())
        });
    }
    group.finish();
}
