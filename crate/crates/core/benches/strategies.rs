use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sumrank_core::compositions::RankProfile;
use sumrank_core::intersections::theorem1_literal_with;
use sumrank_core::oracle::{canonical_centers, Oracle, DEFAULT_BUDGET};
use sumrank_core::volumes::{sphere_volume_partition_sum, weight_distribution};
use sumrank_core::{Params, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn oracle_histogram(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_histogram");
    group.sample_size(10);
    for (q, m, eta, ell) in [(2, 2, 2, 4), (3, 2, 2, 3)] {
        let p = Params::new(q, m, eta, ell).unwrap();
        let centers = canonical_centers(&p, &RankProfile::new(vec![1; ell as usize])).unwrap();
        for (name, strategy) in STRATEGIES {
            let oracle = Oracle::new(DEFAULT_BUDGET).with_strategy(strategy);
            group.bench_with_input(BenchmarkId::new(name, format!("{q}:{m}:{eta}:{ell}")), &p, |b, p| {
                b.iter(|| oracle.distance_histogram(black_box(p), &centers).unwrap())
            });
        }
    }
    group.finish();
}

fn theorem1(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem1_literal");
    group.sample_size(10);
    let p = Params::new(2, 3, 3, 3).unwrap();
    for (name, strategy) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| theorem1_literal_with(black_box(&p), 5, 5, 4, strategy).unwrap()));
    }
    group.finish();
}

fn distribution(c: &mut Criterion) {
    let mut group = c.benchmark_group("weight_distribution");
    let p = Params::new(2, 4, 4, 6).unwrap();
    group.bench_function("convolution", |b| b.iter(|| weight_distribution(black_box(&p))));
    group.bench_function("partition_sum", |b| {
        b.iter(|| (0..=p.max_weight()).map(|t| sphere_volume_partition_sum(black_box(&p), t)).count())
    });
    group.finish();
}

criterion_group!(benches, oracle_histogram, theorem1, distribution);
criterion_main!(benches);
