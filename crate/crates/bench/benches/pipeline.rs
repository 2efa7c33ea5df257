use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use idealgb::oracle::bm_vanishing_ideal;
use idealgb::workload::{random_points, rng};
use idealgb::{groebner_lagrange, MonomialOrdering, OrderKind};

fn lagrange_vs_bm(c: &mut Criterion) {
    let mut group = c.benchmark_group("lagrange_d2");
    group.sample_size(10);
    let ord = MonomialOrdering::natural(OrderKind::Grlex, 2);
    for n in [8usize, 16, 32] {
        let points = random_points(&mut rng(n as u64), 2, n, 5);
        group.bench_with_input(BenchmarkId::new("pipeline", n), &points, |b, pts| {
            b.iter(|| groebner_lagrange(black_box(pts), &ord).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("buchberger_moller", n), &points, |b, pts| {
            b.iter(|| bm_vanishing_ideal(black_box(pts), &ord).unwrap())
        });
    }
    group.finish();
}

fn orderings(c: &mut Criterion) {
    let mut group = c.benchmark_group("ordering_kind_d3_n8");
    let points = random_points(&mut rng(7), 3, 8, 5);
    for kind in [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex] {
        let ord = MonomialOrdering::natural(kind, 3);
        group.bench_function(kind.name(), |b| b.iter(|| groebner_lagrange(black_box(&points), &ord).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, lagrange_vs_bm, orderings);
criterion_main!(benches);
