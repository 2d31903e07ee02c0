//! Orthographic similarity: normalized edit distance, character-count
//! cosine and Jaro-Winkler, each in `[0, 1]` with 1 meaning an exact match.
//!
//! All metrics work on Unicode code points, so a Devanagari matra counts as
//! one character.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::script::NormalizedWord;

#[derive(Debug, Error, PartialEq)]
pub enum SimilarityError {
    #[error("prefix scale {0} outside (0, 0.25]")]
    PrefixScale(f64),
    #[error("max prefix length {0} outside [0, 4]")]
    PrefixLength(usize),
}

/// Winkler's prefix boost parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JaroWinklerConfig {
    prefix_scale: f64,
    max_prefix_len: usize,
}

impl JaroWinklerConfig {
    pub fn new(prefix_scale: f64, max_prefix_len: usize) -> Result<Self, SimilarityError> {
        if !(prefix_scale > 0.0 && prefix_scale <= 0.25) {
            return Err(SimilarityError::PrefixScale(prefix_scale));
        }
        if max_prefix_len > 4 {
            return Err(SimilarityError::PrefixLength(max_prefix_len));
        }
        Ok(Self { prefix_scale, max_prefix_len })
    }

    pub fn prefix_scale(&self) -> f64 {
        self.prefix_scale
    }

    pub fn max_prefix_len(&self) -> usize {
        self.max_prefix_len
    }
}

impl Default for JaroWinklerConfig {
    fn default() -> Self {
        Self { prefix_scale: 0.1, max_prefix_len: 4 }
    }
}

/// The three metric values for a word pair and their uniform average.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityScores {
    pub ned: f64,
    pub cos: f64,
    pub jws: f64,
    pub avg: f64,
}

impl SimilarityScores {
    pub fn from_metrics(ned: f64, cos: f64, jws: f64) -> Self {
        Self { ned, cos, jws, avg: (ned + cos + jws) / 3.0 }
    }
}

/// Levenshtein distance with unit costs.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    edit_distance_chars(&a, &b)
}

fn edit_distance_chars(a: &[char], b: &[char]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// `1 - edit_distance / max_len`; 1 for two empty strings.
pub fn ned_similarity(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let longest = a.len().max(b.len());
    if longest == 0 {
        return 1.0;
    }
    1.0 - edit_distance_chars(&a, &b) as f64 / longest as f64
}

pub fn char_count_vector(w: &str) -> HashMap<char, usize> {
    let mut counts = HashMap::new();
    for c in w.chars() {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts
}

/// Cosine of the angle between the character-count vectors.
pub fn cosine_similarity(a: &str, b: &str) -> f64 {
    let va = char_count_vector(a);
    let vb = char_count_vector(b);
    if va.is_empty() || vb.is_empty() {
        return if va.is_empty() && vb.is_empty() { 1.0 } else { 0.0 };
    }
    let dot: u64 = va.iter().map(|(c, &n)| n as u64 * vb.get(c).copied().unwrap_or(0) as u64).sum();
    let sq = |v: &HashMap<char, usize>| v.values().map(|&n| (n * n) as u64).sum::<u64>();
    // integer norms keep identical multisets at exactly 1.0
    let denom = ((sq(&va) as f64) * (sq(&vb) as f64)).sqrt();
    (dot as f64 / denom).min(1.0)
}

pub fn jaro_similarity(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    jaro_chars(&a, &b)
}

fn jaro_chars(a: &[char], b: &[char]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let window = (a.len().max(b.len()) / 2).saturating_sub(1);
    let mut a_matched = vec![false; a.len()];
    let mut b_matched = vec![false; b.len()];
    let mut matches = 0usize;
    for (i, ca) in a.iter().enumerate() {
        let lo = i.saturating_sub(window);
        let hi = (i + window + 1).min(b.len());
        for j in lo..hi {
            if !b_matched[j] && b[j] == *ca {
                a_matched[i] = true;
                b_matched[j] = true;
                matches += 1;
                break;
            }
        }
    }
    if matches == 0 {
        return 0.0;
    }
    let a_seq = a.iter().zip(&a_matched).filter(|(_, &m)| m).map(|(c, _)| c);
    let b_seq = b.iter().zip(&b_matched).filter(|(_, &m)| m).map(|(c, _)| c);
    let half_transpositions = a_seq.zip(b_seq).filter(|(x, y)| x != y).count();
    let m = matches as f64;
    let t = half_transpositions as f64 / 2.0;
    (m / a.len() as f64 + m / b.len() as f64 + (m - t) / m) / 3.0
}

fn common_prefix_len(a: &[char], b: &[char]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Jaro similarity boosted by the shared prefix: `J + l * p * (1 - J)`.
pub fn jaro_winkler_similarity(a: &str, b: &str, cfg: JaroWinklerConfig) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let j = jaro_chars(&a, &b);
    let prefix = common_prefix_len(&a, &b).min(cfg.max_prefix_len) as f64;
    (j + prefix * cfg.prefix_scale * (1.0 - j)).min(1.0)
}

/// All three metrics on raw strings.
pub fn score_strs(a: &str, b: &str, cfg: JaroWinklerConfig) -> SimilarityScores {
    SimilarityScores::from_metrics(ned_similarity(a, b), cosine_similarity(a, b), jaro_winkler_similarity(a, b, cfg))
}

pub fn score_pair(a: &NormalizedWord, b: &NormalizedWord, cfg: JaroWinklerConfig) -> SimilarityScores {
    score_strs(a.as_str(), b.as_str(), cfg)
}
