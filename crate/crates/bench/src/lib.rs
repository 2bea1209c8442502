use criterion::{black_box, BenchmarkId, Criterion};
use dm_core::{
    audit_pairing, count_family, count_table, enumerate_involutions, involution_descent_table,
    EnumerationBound, MatrixFamilyKey,
};

pub fn involutions(c: &mut Criterion) {
    let bound = EnumerationBound::default();
    let mut group = c.benchmark_group("involutions");
    for n in [8, 10, 12] {
        group.bench_with_input(BenchmarkId::new("enumerate", n), &n, |b, &n| {
            b.iter(|| enumerate_involutions(black_box(n), bound).unwrap().count())
        });
        group.bench_with_input(BenchmarkId::new("descent_table", n), &n, |b, &n| {
            b.iter(|| involution_descent_table(black_box(n), bound).unwrap())
        });
    }
    group.finish();
}

pub fn families(c: &mut Criterion) {
    let bound = EnumerationBound::default();
    let mut group = c.benchmark_group("families");
    group.sample_size(10);
    for (n, k) in [(8, 4), (9, 5), (10, 5)] {
        let key = MatrixFamilyKey::new(n, k, false).unwrap();
        group.bench_with_input(
            BenchmarkId::new("count_family", format!("{n}x{k}")),
            &key,
            |b, key| b.iter(|| count_family(black_box(key), bound).unwrap()),
        );
    }
    for n in [7, 8] {
        group.bench_with_input(BenchmarkId::new("count_table", n), &n, |b, &n| {
            b.iter(|| count_table(black_box(n), false, bound).unwrap())
        });
    }
    group.finish();
}

pub fn pairing(c: &mut Criterion) {
    let bound = EnumerationBound::default();
    let mut group = c.benchmark_group("pairing");
    group.sample_size(10);
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::new("audit", n), &n, |b, &n| {
            b.iter(|| audit_pairing(black_box(n), false, bound).unwrap())
        });
    }
    group.finish();
}
