//! Compares the data-parallel mask scan against the sequential fallback on
//! the order-7 search space (2^15 negative-edge masks).

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sgsym::enumerate::{scan_masks_parallel, scan_masks_sequential, EnumMode};

fn bench_mask_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("mask_scan_order7");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| scan_masks_parallel(black_box(7), EnumMode::Full))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| scan_masks_sequential(black_box(7), EnumMode::Full))
    });
    group.finish();
}

criterion_group!(benches, bench_mask_scan);
criterion_main!(benches);
