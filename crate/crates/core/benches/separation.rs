use criterion::{criterion_group, criterion_main, Criterion};

use cosys::catalog;
use cosys::cosystole::{admissible_triples_with, sys3_star_with};
use cosys::par::ExecMode;

fn modes(c: &mut Criterion) {
    for name in ["R16", "M_K7"] {
        let m = catalog::get(name).unwrap().matroid;
        let mut group = c.benchmark_group(name);
        group.sample_size(10);
        for (label, mode) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
            group.bench_function(format!("triples/{label}"), |b| b.iter(|| admissible_triples_with(&m, mode)));
            group.bench_function(format!("sys3_star/{label}"), |b| b.iter(|| sys3_star_with(&m, mode).unwrap()));
        }
        group.finish();
    }
}

criterion_group!(benches, modes);
criterion_main!(benches);
