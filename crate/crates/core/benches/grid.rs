//! Sequential vs parallel execution of the two grid workloads: a λ-sweep and
//! the reduced verification suite.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gegenbauer_core::params::ratio;
use gegenbauer_core::sweep::SweepTable;
use gegenbauer_core::verify::{run_suite, Group, SuiteConfig};
use gegenbauer_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep_n8_n9");
    let (lo, hi) = (ratio(-3, 2), ratio(0, 1));
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 120), &exec, |b, &exec| {
            b.iter(|| SweepTable::range(&[8, 9], &lo, &hi, 120, exec).unwrap())
        });
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_quick");
    g.sample_size(10);
    let mut cfg = SuiteConfig::quick();
    cfg.only.extend([Group::Interlacing, Group::Bounds, Group::Identity35]);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| run_suite(&cfg, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, sweep, suite);
criterion_main!(benches);
