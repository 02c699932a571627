//! Tensor quotients and dominions over growing cyclic monoid tables.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use squier_core::actions::{dominion, tensor_product, FiniteMonoid, Submonoid};

fn cyclic(n: usize) -> FiniteMonoid {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteMonoid::new(names, rows).unwrap()
}

fn bench_tensor(c: &mut Criterion) {
    let mut group = c.benchmark_group("tensor over the even subgroup");
    for n in [8usize, 16, 32] {
        let m = cyclic(n);
        let u = Submonoid::generated(&m, &[2]).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| black_box(tensor_product(&m, &u).unwrap()))
        });
    }
    group.finish();

    let m = cyclic(24);
    let u = Submonoid::generated(&m, &[4]).unwrap();
    c.bench_function("dominion in a cyclic monoid of order twenty-four", |b| {
        b.iter(|| black_box(dominion(&m, &u).unwrap()))
    });
}

criterion_group!(benches, bench_tensor);
criterion_main!(benches);
