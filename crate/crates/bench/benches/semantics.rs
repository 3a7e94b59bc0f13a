use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lpfix::levelmap::{greatest_model_with_condition, Condition};
use lpfix::semantics::{
    fitting_model, maxwf_alternating, maxwf_model, stable_models, well_founded_model,
    wf_alternating,
};
use lpfix_bench::{chain_program, random_program};

fn operators(c: &mut Criterion) {
    let mut group = c.benchmark_group("partial-semantics");
    for atoms in [8usize, 32, 128] {
        let g = random_program(42, atoms, atoms * 2);
        group.bench_with_input(BenchmarkId::new("fitting", atoms), &g, |b, g| {
            b.iter(|| fitting_model(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("wf", atoms), &g, |b, g| {
            b.iter(|| well_founded_model(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("wf-alt", atoms), &g, |b, g| {
            b.iter(|| wf_alternating(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("maxwf", atoms), &g, |b, g| {
            b.iter(|| maxwf_model(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("maxwf-alt", atoms), &g, |b, g| {
            b.iter(|| maxwf_alternating(g).unwrap())
        });
    }
    group.finish();
}

fn grounding(c: &mut Criterion) {
    c.bench_function("ground-chain-12", |b| b.iter(|| chain_program(12)));
    let g = chain_program(12);
    c.bench_function("wf-chain-12", |b| {
        b.iter(|| well_founded_model(&g).unwrap())
    });
}

fn oracles(c: &mut Criterion) {
    let g = random_program(7, 12, 16);
    c.bench_function("stable-enumeration-12", |b| {
        b.iter(|| stable_models(&g, 20).unwrap())
    });
    let small = random_program(7, 4, 6);
    c.bench_function("greatest-cw-4", |b| {
        b.iter(|| greatest_model_with_condition(&small, Condition::Cw, 4).unwrap())
    });
}

criterion_group!(
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = operators, grounding, oracles
);
criterion_main!(benches);
