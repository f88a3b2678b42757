use std::hint::black_box;

use alexmod_core::coinvariants::{global_alexander_module, local_alexander_module};
use alexmod_core::linalg::{characteristic_matrix, smith_normal_form_poly, smith_normal_form_z};
use alexmod_core::module::{module_from_automorphism, power_transform};
use alexmod_core::monodromy::{infinity_jordan, section7_rep};
use alexmod_core::{FieldElement, IntMatrix, Mode, UniPoly};
use criterion::{criterion_group, criterion_main, Criterion};

fn dense(n: usize) -> IntMatrix {
    let v: Vec<i64> = (0..n * n).map(|k| ((k * 7 + 3) % 11) as i64 - 5).collect();
    IntMatrix::from_i64(n, n, &v)
}

fn smith(c: &mut Criterion) {
    for n in [4, 8, 12] {
        let a = dense(n);
        c.bench_function(&format!("snf_z_{n}"), |b| b.iter(|| smith_normal_form_z(black_box(&a))));
    }
    let t = infinity_jordan();
    let x = characteristic_matrix(&t);
    c.bench_function("snf_poly_jordan", |b| b.iter(|| smith_normal_form_poly(black_box(&x), true)));
    c.bench_function("module_from_automorphism", |b| {
        b.iter(|| module_from_automorphism(black_box(&t)).unwrap())
    });
}

fn coinvariants(c: &mut Criterion) {
    let rep = section7_rep(FieldElement::int(0), 2).unwrap();
    c.bench_function("global_module", |b| {
        b.iter(|| global_alexander_module(black_box(&rep), Mode::Field).unwrap())
    });
    c.bench_function("local_module", |b| {
        b.iter(|| local_alexander_module(black_box(&rep), Mode::Field).unwrap())
    });
}

fn transform(c: &mut Criterion) {
    let p = UniPoly::from_ints(&[1, -2, 0, 3, 1]);
    for ell in [3, 12, -7] {
        c.bench_function(&format!("power_transform_{ell}"), |b| {
            b.iter(|| power_transform(black_box(&p), ell).unwrap())
        });
    }
}

criterion_group!(benches, smith, coinvariants, transform);
criterion_main!(benches);
