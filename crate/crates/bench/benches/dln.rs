use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dln_bench::KNOTS;
use dln_core::coloring;
use dln_core::cover::{CoefficientTable, ConfigurationDiagram};
use dln_core::knot;
use dln_core::linking;

fn colorings(c: &mut Criterion) {
    let mut g = c.benchmark_group("colorings");
    for &(name, braid, p) in KNOTS {
        let d = knot::diagram_from_braid(braid).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| {
                coloring::equivalence_classes(&coloring::fox_colorings(black_box(d), p).unwrap())
            })
        });
    }
    g.finish();
}

fn chain_systems(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve_components");
    for &(name, braid, p) in KNOTS {
        let d = knot::diagram_from_braid(braid).unwrap();
        let col = coloring::fox_colorings(&d, p).unwrap().remove(0);
        let t = CoefficientTable::new(&ConfigurationDiagram::build(&d, &col), &d);
        g.bench_with_input(BenchmarkId::from_parameter(name), &t, |b, t| {
            b.iter(|| linking::solve_components(black_box(t)))
        });
    }
    g.finish();
}

fn full_invariant(c: &mut Criterion) {
    let mut g = c.benchmark_group("dln");
    for &(name, braid, p) in KNOTS {
        g.bench_function(name, |b| {
            b.iter(|| {
                let d = knot::diagram_from_braid(black_box(braid)).unwrap();
                let classes =
                    coloring::equivalence_classes(&coloring::fox_colorings(&d, p).unwrap());
                classes
                    .iter()
                    .map(|col| linking::dln(&d, col).unwrap().multiset)
                    .collect::<Vec<_>>()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, colorings, chain_systems, full_invariant);
criterion_main!(benches);
