use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::Rng;

use rootwork::charp::bch_table;
use rootwork::selftest::{exp_trial, yun_oracle_sweep};
use rootwork::trials::{first_failure, Execution};
use rootwork::{RootSystem, TypeLabel};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn alcove_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("alcove_basis_vs_oracle");
    group.sample_size(10);
    for (label, rank) in [(TypeLabel::A, 3), (TypeLabel::B, 3)] {
        let rs = RootSystem::build(label, rank).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, rs.name()), &rs, |b, rs| {
                b.iter(|| yun_oracle_sweep(rs, exec, 7, 200).unwrap())
            });
        }
    }
    group.finish();
}

fn exp_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("exp_identities");
    group.sample_size(10);
    for p in [5u64, 7] {
        let table = bch_table(p, (p - 1) as usize).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, p), &table, |b, table| {
                b.iter(|| {
                    let fail = first_failure(exec, 11, 100, |_, rng| {
                        let n = rng.random_range(1..=p as usize);
                        exp_trial(rng, n, p, table)
                    });
                    assert!(fail.is_none());
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, alcove_sweep, exp_sweep);
criterion_main!(benches);
