use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use equitab::order::poset::{build_poset, PosetMode, PosetOptions};
use equitab::schur::ExpansionEngine;

fn poset(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_poset");
    group.sample_size(10);
    for (a, n, m) in [(2, 2, 3), (2, 3, 3), (1, 4, 4)] {
        for (label, mode) in [("verify", PosetMode::Verify), ("fast", PosetMode::Fast)] {
            let id = BenchmarkId::new(label, format!("a={a} n={n} m={m}"));
            group.bench_function(id, |b| {
                b.iter(|| {
                    let engine = ExpansionEngine::default();
                    build_poset(
                        &engine,
                        a,
                        n,
                        m,
                        PosetOptions {
                            mode,
                            ..PosetOptions::default()
                        },
                    )
                    .unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, poset);
criterion_main!(benches);
