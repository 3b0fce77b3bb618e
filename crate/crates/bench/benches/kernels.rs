use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use freepoly::cyclotomic::{rat, CycNum};
use freepoly::ypoly::minimal_polynomial;
use freepoly::{analyze_poly, qo_root_expand};
use freepoly_bench::{quartic, quartic_root, sextic_root};

fn cyclotomic(c: &mut Criterion) {
    let a = &CycNum::root_of_unity(1, 24) + &CycNum::from_rat(rat(3, 7));
    let b = &CycNum::root_of_unity(5, 24) - &CycNum::from_rat(rat(2, 5));
    c.bench_function("cyclotomic_mul_24", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
    c.bench_function("cyclotomic_invert_24", |bench| {
        bench.iter(|| black_box(&a).invert().unwrap())
    });
}

fn resultants(c: &mut Criterion) {
    let f = quartic();
    let g = f.approximate_root(2).unwrap();
    c.bench_function("resultant_deg4_deg2", |bench| {
        bench.iter(|| black_box(&f).resultant_y(black_box(&g)))
    });
    c.bench_function("discriminant_deg4", |bench| {
        bench.iter(|| black_box(&f).discriminant_y())
    });
}

fn minimal_polynomials(c: &mut Criterion) {
    let r4 = quartic_root();
    let r6 = sextic_root();
    c.bench_function("minimal_polynomial_n4", |bench| {
        bench.iter(|| minimal_polynomial(black_box(&r4), 4).unwrap())
    });
    c.bench_function("minimal_polynomial_n6", |bench| {
        bench.iter(|| minimal_polynomial(black_box(&r6), 6).unwrap())
    });
    c.bench_function("conjugates_n6", |bench| {
        bench.iter(|| black_box(&r6).conjugates(6).unwrap())
    });
}

fn expansion(c: &mut Criterion) {
    let f = quartic();
    for bound in [4i64, 8, 16] {
        c.bench_function(&format!("qo_root_expand_bound_{}", bound), |bench| {
            bench.iter_batched(
                || f.clone(),
                |f| qo_root_expand(&f, &rat(bound, 1)).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
}

fn full_analysis(c: &mut Criterion) {
    let f = quartic();
    c.bench_function("analyze_poly_quartic", |bench| {
        bench.iter(|| analyze_poly(black_box(&f), &rat(8, 1)).unwrap())
    });
}

criterion_group!(
    benches,
    cyclotomic,
    resultants,
    minimal_polynomials,
    expansion,
    full_analysis
);
criterion_main!(benches);
