use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kisin_core::connectivity::build_graph_with;
use kisin_core::group::Cochar;
use kisin_core::oracle::{scan_cosets, Field, ScanOptions};
use kisin_core::strata::{enumerate_strata_with, EnumOptions};
use kisin_core::{golden, Execution, FrobeniusDatum};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_strata");
    group.sample_size(10);
    let (d, mu) = golden::counterexample_a(5).unwrap();
    for (name, exec) in MODES {
        let opts = EnumOptions { exec, ..EnumOptions::default() };
        group.bench_with_input(BenchmarkId::new(name, "counterexample_a_p5"), &opts, |b, opts| {
            b.iter(|| enumerate_strata_with(&d, &mu, *opts).unwrap())
        });
    }
    group.finish();
}

fn graph(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    group.sample_size(10);
    let d = FrobeniusDatum::caruso(4, 1, 2, 3).unwrap();
    let mu = Cochar::from_blocks(vec![vec![4, 2, 1, 0]]).unwrap();
    for (name, exec) in MODES {
        let opts = EnumOptions { exec, ..EnumOptions::default() };
        group.bench_with_input(BenchmarkId::new(name, "gl4_p2_m3"), &opts, |b, opts| {
            b.iter(|| build_graph_with(&d, &mu, *opts).unwrap())
        });
    }
    group.finish();
}

fn oracle_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_cosets");
    group.sample_size(10);
    let d = FrobeniusDatum::caruso(2, 1, 3, 1).unwrap();
    let f = Field::new(3, 1).unwrap();
    for (name, exec) in MODES {
        let opts = ScanOptions { exec, ..ScanOptions::default() };
        group.bench_with_input(BenchmarkId::new(name, "gl2_f3_box2"), &opts, |b, opts| {
            b.iter(|| scan_cosets(&d, &f, 2, *opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, graph, oracle_scan);
criterion_main!(benches);
