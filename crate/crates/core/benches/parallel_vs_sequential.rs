use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyrito_core::lattice::{shell_with, voronoi_check_with, wigner_seitz, LatticeKind};
use pyrito_core::par::Strategy;
use pyrito_core::polyhedra::{fibonacci_family_with, A1Policy};
use pyrito_core::qgroups::{closure, icosahedral_generators};
use pyrito_core::transform::{reflection_from_root, OrthoElement};
use pyrito_core::Quaternion;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn icosahedral_closure(c: &mut Criterion) {
    let [p, q] = icosahedral_generators();
    let gens = [p, q, Quaternion::e1()];
    let mut group = c.benchmark_group("binary_icosahedral_closure");
    for (label, s) in STRATEGIES {
        group.bench_function(label, |b| b.iter(|| closure(black_box(&gens), 200, s).unwrap()));
    }
    group.finish();
}

fn oh_closure(c: &mut Criterion) {
    let gens: Vec<OrthoElement> = [(1, -1, 0), (0, 1, -1), (0, 0, 1)]
        .iter()
        .map(|&(x, y, z)| reflection_from_root(&Quaternion::pure_ints(x, y, z)).unwrap())
        .collect();
    let mut group = c.benchmark_group("octahedral_closure");
    for (label, s) in STRATEGIES {
        group.bench_function(label, |b| b.iter(|| closure(black_box(&gens), 100, s).unwrap()));
    }
    group.finish();
}

fn lattice_shells(c: &mut Criterion) {
    let mut group = c.benchmark_group("fcc_shell");
    group.sample_size(10);
    for n2 in [18i64, 50] {
        let r = BigRational::from_integer(BigInt::from(n2));
        for (label, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, n2), &r, |b, r| {
                b.iter(|| shell_with(LatticeKind::Fcc, black_box(r), s).unwrap())
            });
        }
    }
    group.finish();
}

fn voronoi(c: &mut Criterion) {
    let cell = wigner_seitz(LatticeKind::Fcc);
    let mut group = c.benchmark_group("voronoi_check_fcc");
    group.sample_size(10);
    for (label, s) in STRATEGIES {
        group.bench_function(label, |b| b.iter(|| voronoi_check_with(black_box(&cell), s)));
    }
    group.finish();
}

fn fibonacci_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("fibonacci_family");
    group.sample_size(10);
    for (label, s) in STRATEGIES {
        group.bench_function(label, |b| {
            b.iter(|| fibonacci_family_with(black_box(8), A1Policy::ClearDenominators, s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, icosahedral_closure, oh_closure, lattice_shells, voronoi, fibonacci_batch);
criterion_main!(benches);
