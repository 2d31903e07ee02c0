//! Synthetic labeled datasets.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cognate_core::dataset::{score_and_label, LanguagePair, Origin};
use cognate_core::{JaroWinklerConfig, Language, LabeledDataset, NormalizedWord, Threshold, WordPair};

/// क..न, the source alphabet.
pub const ALPHA_A: (u32, u32) = (0x0915, 20);
/// प..ह, disjoint from [`ALPHA_A`].
pub const ALPHA_B: (u32, u32) = (0x092A, 16);

pub fn word(rng: &mut ChaCha8Rng, alphabet: (u32, u32), len: usize) -> String {
    (0..len).map(|_| char::from_u32(alphabet.0 + rng.random_range(0..alphabet.1)).unwrap()).collect()
}

/// A word of random length 3..=6 not produced before.
pub fn fresh(rng: &mut ChaCha8Rng, alphabet: (u32, u32), seen: &mut HashSet<String>) -> String {
    loop {
        let len = rng.random_range(3..=6);
        let w = word(rng, alphabet, len);
        if seen.insert(w.clone()) {
            return w;
        }
    }
}

pub fn lp() -> LanguagePair {
    LanguagePair::hindi_to(Language::Mr)
}

pub fn labeled(pairs: &[(String, String)], origin: Origin) -> LabeledDataset {
    let ps: Vec<WordPair> = pairs
        .iter()
        .map(|(s, t)| {
            WordPair::new(
                NormalizedWord::new(s.clone(), Language::Hi).unwrap(),
                NormalizedWord::new(t.clone(), Language::Mr).unwrap(),
                origin,
            )
        })
        .collect();
    score_and_label(&ps, lp(), Threshold::default(), JaroWinklerConfig::default())
}

/// `n` identical-word positives and `n` negatives whose targets come from a
/// disjoint alphabet. Negative targets are drawn from a pool of `n / 20`
/// words, so they recur across folds.
pub fn separable(n: usize, seed: u64) -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let pool: Vec<String> = (0..(n / 20).max(2)).map(|_| fresh(&mut rng, ALPHA_B, &mut seen)).collect();
    let mut pairs = Vec::with_capacity(2 * n);
    for _ in 0..n {
        let w = fresh(&mut rng, ALPHA_A, &mut seen);
        pairs.push((w.clone(), w));
        let s = fresh(&mut rng, ALPHA_A, &mut seen);
        pairs.push((s, pool[rng.random_range(0..pool.len())].clone()));
    }
    pairs
}

/// Like [`separable`] but every word occurs exactly once, so no test word
/// was seen in training.
pub fn all_unseen(n: usize, seed: u64) -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut pairs = Vec::with_capacity(2 * n);
    for _ in 0..n {
        let w = fresh(&mut rng, ALPHA_A, &mut seen);
        pairs.push((w.clone(), w));
        let s = fresh(&mut rng, ALPHA_A, &mut seen);
        let t = fresh(&mut rng, ALPHA_B, &mut seen);
        pairs.push((s, t));
    }
    pairs
}
