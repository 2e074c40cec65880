use criterion::{criterion_group, criterion_main, Criterion};
use schurcalc::rep_ring::{char_of, decompose, ext_power};
use schurcalc::{RepElement, Weight};
use std::hint::black_box;

fn irr(v: &[i64]) -> RepElement {
    RepElement::irreducible(Weight::new(v.to_vec()).unwrap())
}

fn ring(c: &mut Criterion) {
    let a = irr(&[4, 2, 1, 0]);
    let b = irr(&[3, 2, 0, -1]);
    c.bench_function("lr tensor rank 4", |bch| {
        bch.iter(|| black_box(&a).tensor(black_box(&b)).unwrap())
    });
    c.bench_function("character round trip rank 4", |bch| {
        bch.iter(|| decompose(&char_of(black_box(&a))).unwrap())
    });
    let nprime = irr(&[2, -1]);
    c.bench_function("wedge^2 of Σ^(2,-1)", |bch| {
        bch.iter(|| ext_power(black_box(&nprime), 2).unwrap())
    });
}

criterion_group!(benches, ring);
criterion_main!(benches);
