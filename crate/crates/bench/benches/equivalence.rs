use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use polycode::equivalence::{is_isodual, DEFAULT_NODE_BUDGET};
use polycode::polycyclic::{family_correspondence, PolycyclicCode};
use polycode::{FieldCtx, Polynomial};

fn equivalence(c: &mut Criterion) {
    let f2 = FieldCtx::prime(2).unwrap();
    let f3 = FieldCtx::prime(3).unwrap();
    let p = |s: &str, ctx: &FieldCtx| Polynomial::parse(s, ctx).unwrap();

    let g = p("x^2+x+1", &f2)
        .mul(&p("x^4+x+1", &f2))
        .mul(&p("x^4+x+1", &f2));
    let code = PolycyclicCode::new(&p("x^20+x^10+1", &f2), &g).unwrap();
    c.bench_function("isodual [20,10] over GF(2)", |b| {
        b.iter(|| is_isodual(black_box(code.code()), DEFAULT_NODE_BUDGET).unwrap())
    });

    let t = p("x^10+x^8+1", &f3);
    let mut group = c.benchmark_group("correspondence");
    group.sample_size(10);
    group.bench_function("x^10+x^8+1 over GF(3)", |b| {
        b.iter(|| family_correspondence(black_box(&t), DEFAULT_NODE_BUDGET).unwrap())
    });
    group.finish();
}

criterion_group!(benches, equivalence);
criterion_main!(benches);
