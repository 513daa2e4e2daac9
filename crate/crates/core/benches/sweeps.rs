use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypoplactic::graph::{ComponentAtlas, GraphKind};
use hypoplactic::words::all_words_up_to;
use hypoplactic::{hypo_rsk, verify, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn atlas(c: &mut Criterion) {
    let mut group = c.benchmark_group("atlas");
    group.sample_size(10);
    let words = all_words_up_to(4, 6);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, words.len()), &words, |b, words| {
            b.iter(|| ComponentAtlas::build(words, 4, GraphKind::QuasiCrystal, exec).unwrap())
        });
    }
    group.finish();
}

fn insertion(c: &mut Criterion) {
    let mut group = c.benchmark_group("insertion");
    let words = verify::random_words(1, 20_000, 9, 24);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, words.len()), &words, |b, words| {
            b.iter(|| exec.map(words, hypo_rsk))
        });
    }
    group.finish();
}

fn criteria(c: &mut Criterion) {
    let mut group = c.benchmark_group("criteria");
    group.sample_size(10);
    for id in [2, 5, 9] {
        for (name, exec) in MODES {
            group.bench_function(BenchmarkId::new(name, id), |b| {
                b.iter(|| assert!(verify::run(id, exec).passed))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, atlas, insertion, criteria);
criterion_main!(benches);
