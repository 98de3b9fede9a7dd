use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use polycode::poly::{factorize, poly_order};
use polycode::polycyclic::enumerate_family;
use polycode::{FieldCtx, Polynomial};

fn algebra(c: &mut Criterion) {
    let f2 = FieldCtx::prime(2).unwrap();
    let f3 = FieldCtx::prime(3).unwrap();
    let gf16 = FieldCtx::new(2, 4).unwrap();
    let binary = Polynomial::parse("x^20+x^10+1", &f2).unwrap();
    let ternary = Polynomial::parse("x^10+x^8+1", &f3).unwrap();
    let ext = Polynomial::parse("x^10+[0,0,1]*x^4+[1,0,1]", &gf16).unwrap();

    c.bench_function("factorize x^20+x^10+1 over GF(2)", |b| {
        b.iter(|| factorize(black_box(&binary)).unwrap())
    });
    c.bench_function("factorize degree 10 over GF(16)", |b| {
        b.iter(|| factorize(black_box(&ext)).unwrap())
    });
    c.bench_function("order x^10+x^8+1 over GF(3)", |b| {
        b.iter(|| poly_order(black_box(&ternary)).unwrap())
    });
    c.bench_function("family x^20+x^10+1 over GF(2)", |b| {
        b.iter(|| enumerate_family(black_box(&binary)).unwrap())
    });
}

criterion_group!(benches, algebra);
criterion_main!(benches);
