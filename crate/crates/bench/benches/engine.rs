use blowup_core::blowup::{j_multiplicity, random_minimal_reduction, rees_presentation};
use blowup_core::harness::{ex61, ex62, ex63, family_sample};
use blowup_core::hilbert::hilbert_series_of_quotient;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn groebner(c: &mut Criterion) {
    let i = ex62().unwrap().ideal;
    c.bench_function("gb/ex62", |b| {
        b.iter(|| {
            // a fresh ideal each time, the basis is cached per ideal
            let fresh = blowup_core::Ideal::new(i.ring(), i.gens().to_vec()).unwrap();
            black_box(fresh.gb().unwrap().basis().len())
        })
    });
    let sq = i.power(2).unwrap();
    c.bench_function("gb/ex62_squared", |b| {
        b.iter(|| {
            let fresh = blowup_core::Ideal::new(sq.ring(), sq.gens().to_vec()).unwrap();
            black_box(fresh.gb().unwrap().basis().len())
        })
    });
}

fn presentations(c: &mut Criterion) {
    for (name, i) in [("ex61_3_3", ex61(3, 3).unwrap().ideal), ("ex62", ex62().unwrap().ideal)] {
        c.bench_function(&format!("rees/{name}"), |b| {
            b.iter(|| black_box(rees_presentation(&i).unwrap()))
        });
    }
}

fn series(c: &mut Criterion) {
    let i = ex62().unwrap().ideal.power(3).unwrap();
    c.bench_function("hilbert/ex62_cubed", |b| {
        b.iter(|| {
            let fresh = blowup_core::Ideal::new(i.ring(), i.gens().to_vec()).unwrap();
            black_box(hilbert_series_of_quotient(&fresh).unwrap())
        })
    });
}

fn invariants(c: &mut Criterion) {
    let i = ex63().unwrap().ideal;
    c.bench_function("jmult/ex63", |b| {
        b.iter(|| black_box(j_multiplicity(&i, 1).unwrap().j_value))
    });
    let i = ex62().unwrap().ideal;
    c.bench_function("reduction/ex62", |b| {
        b.iter(|| black_box(random_minimal_reduction(&i, 3).unwrap().r_j))
    });
}

fn family(c: &mut Criterion) {
    let mut g = c.benchmark_group("family");
    g.sample_size(10);
    g.bench_function("sample_3_4", |b| {
        b.iter(|| black_box(family_sample(3, 4, 1, true, false).unwrap().r_k))
    });
    g.finish();
}

criterion_group!(benches, groebner, presentations, series, invariants, family);
criterion_main!(benches);
