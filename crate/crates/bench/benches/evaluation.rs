use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qbaf_bench::graphs::{reference_graph, ReferenceGraph};
use qbaf_bench::{histogram_fig7, reproduce_table4, sweep_fig6};
use qbaf_core::engine::{as_aggregative, evaluate};
use qbaf_core::Literature;

fn evaluation(c: &mut Criterion) {
    let g = reference_graph(ReferenceGraph::Fig6Final);
    for l in Literature::ALL {
        let s = as_aggregative(l);
        c.bench_function(&format!("fig6/{}", l.name()), |b| b.iter(|| evaluate(black_box(&s), black_box(&g))));
    }
    c.bench_function("table4", |b| b.iter(reproduce_table4));
    let mut slow = c.benchmark_group("sweep");
    slow.sample_size(10);
    slow.bench_function("sweep+histogram", |b| b.iter(|| histogram_fig7(&sweep_fig6())));
    slow.finish();
}

criterion_group!(benches, evaluation);
criterion_main!(benches);
