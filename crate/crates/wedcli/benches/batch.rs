//! Batch throughput: thread-pool fan-out against the sequential loop.
//!
//! Each instance is a long periodic string against a one-deletion copy,
//! so the kernel does real shrinking work before the banded pass. Run
//! with `cargo bench -p wedcli` and compare the two groups.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use wed_core::{Alphabet, Symbol, WeightTable};
use wedcli::{run_batch_with_mode, BatchMode};

const K: usize = 2;

fn instances(alpha: &mut Alphabet) -> Vec<(Vec<Symbol>, Vec<Symbol>)> {
    let a = alpha.intern("a");
    let b = alpha.intern("b");
    let c = alpha.intern("c");
    (0..24)
        .map(|i| {
            let n = 8_000 + 512 * i;
            let x: Vec<Symbol> = (0..n)
                .map(|j| match j % 3 {
                    0 => a,
                    1 => b,
                    _ => c,
                })
                .collect();
            let mut y = x.clone();
            y.remove(n / 2 + i);
            (x, y)
        })
        .collect()
}

fn bench_batch(cr: &mut Criterion) {
    let mut alpha = Alphabet::new();
    let items = instances(&mut alpha);
    let w = WeightTable::parse("", &mut alpha).expect("the empty table is the unit table");

    let mut group = cr.benchmark_group("string_batch");
    group.throughput(Throughput::Elements(items.len() as u64));
    for mode in [BatchMode::Sequential, BatchMode::Parallel] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{mode:?}")),
            &mode,
            |bench, &mode| {
                bench.iter(|| {
                    run_batch_with_mode(&items, mode, |(x, y)| {
                        stringed::weighted_ed_le_k(x, y, K, &w)
                    })
                });
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_batch);
criterion_main!(benches);
