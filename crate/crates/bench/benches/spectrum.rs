use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dynspan::linearize::spectrum;
use dynspan::SpectrumMethod;
use dynspan_bench::fixtures;

fn methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    group.sample_size(10);
    for (label, sys) in fixtures() {
        for (name, method) in [("galois", SpectrumMethod::Galois), ("cyclotomic", SpectrumMethod::Cyclotomic)] {
            group.bench_with_input(BenchmarkId::new(name, &label), &sys, |b, sys| {
                b.iter(|| spectrum(sys, method))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, methods);
criterion_main!(benches);
