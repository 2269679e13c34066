use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use poirev_core::exec::Execution;
use poirev_core::harness::{campaign, Family};
use poirev_core::limits::Limits;
use poirev_core::postulates::PostulateId as P;

const POSTULATES: [P; 8] = [P::C1, P::C2, P::P, P::Beta1, P::Gamma1, P::Alpha1, P::Sep, P::Ik8];

fn bench(c: &mut Criterion) {
    let limits = Limits::with_max_worlds(4);
    let mut g = c.benchmark_group("poi campaign n=3");
    g.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| campaign(&[Family::Poi], 3, &POSTULATES, exec, &limits).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
