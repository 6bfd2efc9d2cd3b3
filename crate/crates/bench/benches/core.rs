use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wqbg_bench::{affine, enumerate, graph};
use wqbg_core::coxeter::DEFAULT_BUDGET;
use wqbg_core::{AdmBudget, EnumeratedGroup, LatticeKind, QuantumBruhatGraph};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for l in ["F4", "E6", "H4"] {
        g.bench_function(l, |b| b.iter(|| EnumeratedGroup::from_label(black_box(l), DEFAULT_BUDGET).unwrap()));
    }
    g.finish();
}

fn qbg_build(c: &mut Criterion) {
    let mut g = c.benchmark_group("qbg-build");
    for l in ["F4", "E6"] {
        let e = enumerate(l);
        g.bench_function(l, |b| b.iter(|| QuantumBruhatGraph::build(e.clone()).unwrap()));
    }
    g.finish();
}

fn all_pairs(c: &mut Criterion) {
    let mut g = c.benchmark_group("all-pairs");
    g.sample_size(10);
    for l in ["F4", "H4"] {
        let q = graph(l);
        g.bench_function(l, |b| b.iter(|| q.all_pairs_summary()));
    }
    g.finish();
}

fn bruhat_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("bruhat");
    g.sample_size(10);
    let aff = affine("A2", LatticeKind::Sc);
    g.bench_function("A2 Adm(14,14)", |b| b.iter(|| aff.admissible_oracle(&[14, 14], AdmBudget::default()).unwrap()));
    let e = enumerate("B4");
    let w0 = e.longest();
    g.bench_function("B4 interval below w0", |b| {
        b.iter(|| (0..e.len() as u32).filter(|&u| e.bruhat_leq(u, w0)).count())
    });
    g.finish();
}

criterion_group!(benches, enumeration, qbg_build, all_pairs, bruhat_scan);
criterion_main!(benches);
