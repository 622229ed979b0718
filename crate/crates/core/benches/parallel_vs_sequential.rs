use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orbifold_gw::frobenius::{WdvvOptions, WdvvSystem};
use orbifold_gw::models::{d4, e6};
use orbifold_gw::modular::{lattice_theta_with, LatticeSpec};
use orbifold_gw::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn wdvv(c: &mut Criterion) {
    let mut group = c.benchmark_group("wdvv");
    group.sample_size(10);
    let d4p = d4::d4_build_potential(20).expect("d4 potential");
    let e6p = e6::e6_build_potential(12, false).expect("e6 potential");
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("d4-T20", label), &exec, |b, &exec| {
            b.iter(|| {
                let sys = WdvvSystem::new(&d4p, 20, exec).expect("system");
                black_box(sys.first_failure(WdvvOptions {
                    exec,
                    skip_symmetric: false,
                }))
            })
        });
        group.bench_with_input(BenchmarkId::new("e6-T12", label), &exec, |b, &exec| {
            b.iter(|| {
                let sys = WdvvSystem::new(&e6p, 12, exec).expect("system");
                black_box(sys.first_failure(WdvvOptions {
                    exec,
                    skip_symmetric: false,
                }))
            })
        });
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("lattice-theta");
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("omega1-400", label), &exec, |b, &exec| {
            b.iter(|| black_box(lattice_theta_with(LatticeSpec::OMEGA1, 400, exec)))
        });
    }
    group.finish();
}

fn gw_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("gw-table");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("kmax-20", label), &exec, |b, &exec| {
            b.iter(|| black_box(e6::e6_gw_table_with(20, exec).expect("table")))
        });
    }
    group.finish();
}

criterion_group!(benches, wdvv, lattice, gw_table);
criterion_main!(benches);
