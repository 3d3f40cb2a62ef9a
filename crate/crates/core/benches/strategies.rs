use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use ntangle::measures::{i_star_with, odd_invariant_with};
use ntangle::state::random::{random_state, rng_from_seed};
use ntangle::verify::{run_suite, SuiteConfig, SuiteName};
use ntangle::{QubitPermutation, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn even_invariant(c: &mut Criterion) {
    let mut group = c.benchmark_group("i_star");
    for n in [16usize, 18, 20, 22] {
        let psi = random_state(n, n as u64).unwrap();
        group.throughput(Throughput::Elements(1 << (n - 1)));
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &psi, |b, psi| {
                b.iter(|| i_star_with(black_box(psi), strategy).unwrap())
            });
        }
    }
    group.finish();
}

fn odd_invariant(c: &mut Criterion) {
    let mut group = c.benchmark_group("odd_invariant");
    for n in [17usize, 21] {
        let psi = random_state(n, n as u64).unwrap();
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &psi, |b, psi| {
                b.iter(|| odd_invariant_with(black_box(psi), strategy).unwrap())
            });
        }
    }
    group.finish();
}

fn permute(c: &mut Criterion) {
    let mut group = c.benchmark_group("permute");
    for n in [16usize, 20] {
        let psi = random_state(n, 1).unwrap();
        let pi = QubitPermutation::random(n, &mut rng_from_seed(2));
        group.throughput(Throughput::Elements(1 << n));
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &psi, |b, psi| {
                b.iter(|| psi.permute_with(&pi, strategy).unwrap())
            });
        }
    }
    group.finish();
}

fn suite_trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite_trials");
    group.sample_size(10);
    for (name, strategy) in STRATEGIES {
        let mut config = SuiteConfig::new(SuiteName::Monotone);
        config.trials = 200;
        config.strategy = strategy;
        group.bench_function(BenchmarkId::new(name, "monotone-200"), |b| {
            b.iter(|| run_suite(&config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    even_invariant,
    odd_invariant,
    permute,
    suite_trials
);
criterion_main!(benches);
