use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sheafcalc_core::{
    chern_from_complex, chi_complex_poly, factor_line, h0_from_resolution, hrr_chi, liaison_residue_of_union,
    parse_complex, verify_all, BettiTable, ChowClass, CurveClass, Registry,
};

fn chow_ring(c: &mut Criterion) {
    let mut group = c.benchmark_group("chow");
    for dim in [3usize, 6] {
        let coeffs: Vec<i64> = (0..=dim as i64).map(|k| 3i64.pow(k as u32)).collect();
        let class = ChowClass::from_i64s(dim, &coeffs).unwrap();
        group.bench_with_input(BenchmarkId::new("inv", dim), &class, |b, x| b.iter(|| x.inv().unwrap()));
        group.bench_with_input(BenchmarkId::new("twist", dim), &class, |b, x| {
            b.iter(|| x.twist(3, black_box(-7)).unwrap())
        });
    }
    let c1 = ChowClass::from_i64s(3, &[1, 3, 9, 27]).unwrap();
    group.bench_function("factor_line", |b| {
        b.iter(|| factor_line(black_box(&c1), 3, 10).unwrap())
    });
    group.finish();
}

fn resolutions(c: &mut Criterion) {
    let text = "0 -> T(-2) + O(-1) -> 7O -> E -> 0";
    let cx = parse_complex(text, 3).unwrap();
    c.bench_function("parse_complex", |b| {
        b.iter(|| parse_complex(black_box(text), 3).unwrap())
    });
    c.bench_function("chern_from_complex", |b| {
        b.iter(|| chern_from_complex(black_box(&cx)).unwrap())
    });
    c.bench_function("chi_complex_poly", |b| {
        b.iter(|| chi_complex_poly(black_box(&cx)).unwrap())
    });
    c.bench_function("h0_from_resolution", |b| {
        b.iter(|| h0_from_resolution(black_box(&cx), 2).unwrap())
    });
    let class = chern_from_complex(&cx).unwrap();
    c.bench_function("hrr_chi", |b| b.iter(|| hrr_chi(3, black_box(&class)).unwrap()));
}

fn curves(c: &mut Criterion) {
    let table = BettiTable::new("", [(0, 2, 1), (0, 3, 2), (0, 4, 1), (1, 4, 2), (1, 5, 2), (2, 6, 1)]).unwrap();
    c.bench_function("hilbert_poly", |b| b.iter(|| black_box(&table).hilbert_poly()));
    c.bench_function("gg_twist_check", |b| {
        b.iter(|| black_box(&table).gg_twist_check(3, false))
    });
    let conics = vec![CurveClass::conic(); 4];
    c.bench_function("liaison_residue_of_union", |b| {
        b.iter(|| liaison_residue_of_union(3, 3, black_box(&conics)).unwrap())
    });
}

fn registry(c: &mut Criterion) {
    let reg = Registry::builtin();
    c.bench_function("verify_all", |b| b.iter(|| verify_all(black_box(&reg))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = chow_ring, resolutions, curves, registry
}
criterion_main!(benches);
