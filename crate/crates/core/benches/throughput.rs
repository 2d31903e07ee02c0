//! Scoring and training throughput, one worker thread against the full pool.
//! Built with `--no-default-features` only the sequential path is measured.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cognate_core::dataset::{score_and_label, LanguagePair, Origin};
use cognate_core::models::{train, Arch, HyperParams};
use cognate_core::{JaroWinklerConfig, Language, NormalizedWord, Threshold, WordPair};

fn word(rng: &mut ChaCha8Rng) -> String {
    let len = rng.random_range(3..=8);
    (0..len).map(|_| char::from_u32(0x0915 + rng.random_range(0..36)).unwrap()).collect()
}

fn pairs(n: usize) -> Vec<WordPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    (0..n)
        .map(|_| {
            let s = word(&mut rng);
            let t = if rng.random_bool(0.5) { s.clone() } else { word(&mut rng) };
            WordPair::new(
                NormalizedWord::new(s, Language::Hi).unwrap(),
                NormalizedWord::new(t, Language::Mr).unwrap(),
                Origin::WnData,
            )
        })
        .collect()
}

fn modes() -> Vec<(&'static str, Option<rayon_pool::Pool>)> {
    #[cfg(feature = "parallel")]
    {
        vec![("1-thread", Some(rayon_pool::with_threads(1))), ("all-threads", Some(rayon_pool::with_threads(0)))]
    }
    #[cfg(not(feature = "parallel"))]
    {
        vec![("sequential", None)]
    }
}

#[cfg(feature = "parallel")]
mod rayon_pool {
    pub type Pool = rayon::ThreadPool;

    pub fn with_threads(n: usize) -> Pool {
        rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap()
    }

    pub fn run<R: Send>(pool: &Option<Pool>, f: impl FnOnce() -> R + Send) -> R {
        pool.as_ref().unwrap().install(f)
    }
}

#[cfg(not(feature = "parallel"))]
mod rayon_pool {
    pub enum Pool {}

    pub fn run<R: Send>(_: &Option<Pool>, f: impl FnOnce() -> R + Send) -> R {
        f()
    }
}

fn scoring(c: &mut Criterion) {
    let data = pairs(20_000);
    let lp = LanguagePair::hindi_to(Language::Mr);
    let mut group = c.benchmark_group("score_and_label");
    group.throughput(Throughput::Elements(data.len() as u64));
    for (name, pool) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| rayon_pool::run(&pool, || score_and_label(&data, lp, Threshold::default(), JaroWinklerConfig::default())))
        });
    }
    group.finish();
}

fn training(c: &mut Criterion) {
    let data = score_and_label(
        &pairs(2_000),
        LanguagePair::hindi_to(Language::Mr),
        Threshold::default(),
        JaroWinklerConfig::default(),
    );
    let hp = HyperParams { epochs: 1, ..HyperParams::default() };
    let mut group = c.benchmark_group("train_one_epoch");
    group.sample_size(10);
    group.throughput(Throughput::Elements(data.len() as u64));
    for arch in Arch::ALL {
        for (name, pool) in modes() {
            group.bench_function(BenchmarkId::new(arch.name(), name), |b| {
                b.iter(|| rayon_pool::run(&pool, || train(arch, &data, &hp).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, scoring, training);
criterion_main!(benches);
