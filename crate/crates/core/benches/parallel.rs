//! Sequential against data-parallel execution for the hot paths: one large
//! twisted product, a batch of standard modules, and an audited expansion.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qtchar::fusion::{standard_modules_batch, twisted_product_with};
use qtchar::{fundamental_qt, fundamental_qt_with, Exec, FactorSpec, FmOptions, RootDatum, SpectralShift};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn twisted_product(c: &mut Criterion) {
    let e6: RootDatum = "E6".parse().unwrap();
    let big = fundamental_qt(&e6, 3, &SpectralShift::at(0)).unwrap();
    let small = fundamental_qt(&e6, 1, &SpectralShift::at(3)).unwrap();
    let mut group = c.benchmark_group("twisted_product E6 V3(0) V1(3)");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| twisted_product_with(&e6, black_box(&big), black_box(&small), exec).unwrap())
        });
    }
    group.finish();
}

fn batch(c: &mut Criterion) {
    let d5: RootDatum = "D5".parse().unwrap();
    let modules: Vec<Vec<FactorSpec>> = (0..32)
        .map(|k| {
            vec![
                FactorSpec::at(1 + k % 5, 0),
                FactorSpec::at(1 + (k / 5) % 5, 1 + (k % 7) as i64),
            ]
        })
        .collect();
    let opts = FmOptions {
        exec: Exec::Sequential,
        ..FmOptions::default()
    };
    let mut group = c.benchmark_group("standard_modules_batch D5 x32");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| standard_modules_batch(&d5, black_box(&modules), &opts, exec))
        });
    }
    group.finish();
}

fn audited_expansion(c: &mut Criterion) {
    let e6: RootDatum = "E6".parse().unwrap();
    let mut group = c.benchmark_group("fundamental_qt E6 V3 with audit");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        let opts = FmOptions {
            exec,
            ..FmOptions::default()
        };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| fundamental_qt_with(&e6, 3, &SpectralShift::at(0), &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, twisted_product, batch, audited_expansion);
criterion_main!(benches);
