//! Word-pair datasets: wordnet synset permutations (WNData), sentence cross
//! products from parallel corpora (PCData), similarity labeling, chunked
//! merging and cross-dataset match counting.

mod corpus;
mod wordnet;

use std::collections::HashSet;
use std::fmt;
use std::io::{Read, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;
use crate::script::{Language, NormalizedWord, ScriptError};
use crate::similarity::{score_pair, JaroWinklerConfig, SimilarityScores};

pub use corpus::{align_comparable, build_pc_pairs, tokenize_line, CorpusOptions, TokenizedLine, DEFAULT_MAX_TOKEN_LEN, DEFAULT_MIN_MATCHES};
pub use wordnet::{build_wn_pairs, parse_wordnet, parse_wordnet_str, MalformedLine, RejectedWord, Synset, WordnetParse};

/// CSV header of labeled datasets and released cognate lists.
pub const CSV_HEADER: [&str; 7] = ["source_word", "target_word", "ned", "cos", "jws", "avg", "label"];

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("corpus line counts differ: source has {source_lines}, target has {target_lines}")]
    LengthMismatch { source_lines: usize, target_lines: usize },
    #[error("datasets cover different language pairs: {0} vs {1}")]
    MismatchedLanguagePair(LanguagePair, LanguagePair),
    #[error("datasets were labeled with different thresholds: {0} vs {1}")]
    MismatchedThreshold(f64, f64),
    #[error("threshold {0} outside (0, 1)")]
    InvalidThreshold(f64),
    #[error("chunk fraction {0} outside (0, 1]")]
    InvalidFraction(f64),
    #[error("source language must be Hindi, got {0}")]
    NonHindiSource(Language),
    #[error("duplicate pair ({0}, {1})")]
    DuplicatePair(String, String),
    #[error("{side} line {line}: {source}")]
    Script {
        side: &'static str,
        line: usize,
        #[source]
        source: ScriptError,
    },
    #[error("csv row {row}: {reason}")]
    Csv { row: usize, reason: String },
    #[error(transparent)]
    CsvFormat(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Hindi plus one target language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LanguagePair {
    source: Language,
    target: Language,
}

impl LanguagePair {
    pub fn new(source: Language, target: Language) -> Result<Self, DatasetError> {
        if source != Language::Hi {
            return Err(DatasetError::NonHindiSource(source));
        }
        Ok(Self { source, target })
    }

    pub fn hindi_to(target: Language) -> Self {
        Self { source: Language::Hi, target }
    }

    pub fn source(&self) -> Language {
        self.source
    }

    pub fn target(&self) -> Language {
        self.target
    }
}

impl fmt::Display for LanguagePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.source, self.target)
    }
}

/// Cognacy cut-off on the averaged similarity; a score equal to the
/// threshold counts as cognate.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Threshold(f64);

impl Threshold {
    pub fn new(value: f64) -> Result<Self, DatasetError> {
        if value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(DatasetError::InvalidThreshold(value))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn label(&self, avg: f64) -> Label {
        if avg >= self.0 {
            Label::Cognate
        } else {
            Label::NonCognate
        }
    }
}

impl Default for Threshold {
    fn default() -> Self {
        Self(0.5)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    NonCognate,
    Cognate,
}

impl Label {
    /// Class index used by the classifiers and the CSV column.
    pub fn index(self) -> usize {
        match self {
            Label::NonCognate => 0,
            Label::Cognate => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(Label::NonCognate),
            1 => Some(Label::Cognate),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    WnData,
    PcData,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordPair {
    pub source: NormalizedWord,
    pub target: NormalizedWord,
    pub origin: Origin,
}

impl WordPair {
    pub fn new(source: NormalizedWord, target: NormalizedWord, origin: Origin) -> Self {
        Self { source, target, origin }
    }
}

/// Anything identified by its (source text, target text) tuple.
pub trait PairKey {
    fn key(&self) -> (&str, &str);
}

impl PairKey for WordPair {
    fn key(&self) -> (&str, &str) {
        (self.source.as_str(), self.target.as_str())
    }
}

impl PairKey for LabeledPair {
    fn key(&self) -> (&str, &str) {
        self.pair.key()
    }
}

/// Sorts by (source, target) and drops repeated keys, keeping the first.
pub fn dedup_sorted<T: PairKey>(mut items: Vec<T>) -> Vec<T> {
    items.sort_by(|a, b| a.key().cmp(&b.key()));
    items.dedup_by(|a, b| a.key() == b.key());
    items
}

/// Pair generation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BuildStats {
    /// Pairs emitted before deduplication.
    pub raw_pairs: usize,
    /// Tokens over the length cap.
    pub long_tokens_dropped: usize,
    /// Characters dropped in lossy transliteration.
    pub chars_dropped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairBuild {
    pub pairs: Vec<WordPair>,
    pub stats: BuildStats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPair {
    pub pair: WordPair,
    pub scores: SimilarityScores,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pairs: Vec<LabeledPair>,
    language_pair: LanguagePair,
    threshold: Threshold,
}

impl LabeledDataset {
    /// Fails on duplicate (source, target) tuples.
    pub fn new(pairs: Vec<LabeledPair>, language_pair: LanguagePair, threshold: Threshold) -> Result<Self, DatasetError> {
        let mut seen = HashSet::with_capacity(pairs.len());
        for p in &pairs {
            if !seen.insert(p.key()) {
                let (s, t) = p.key();
                return Err(DatasetError::DuplicatePair(s.to_string(), t.to_string()));
            }
        }
        Ok(Self { pairs, language_pair, threshold })
    }

    pub fn pairs(&self) -> &[LabeledPair] {
        &self.pairs
    }

    pub fn language_pair(&self) -> LanguagePair {
        self.language_pair
    }

    pub fn threshold(&self) -> Threshold {
        self.threshold
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// (non-cognate, cognate) counts.
    pub fn label_counts(&self) -> (usize, usize) {
        let pos = self.pairs.iter().filter(|p| p.label == Label::Cognate).count();
        (self.pairs.len() - pos, pos)
    }

    /// A dataset over the given indices, in that order.
    pub fn subset(&self, indices: &[usize]) -> Self {
        Self {
            pairs: indices.iter().map(|&i| self.pairs[i].clone()).collect(),
            language_pair: self.language_pair,
            threshold: self.threshold,
        }
    }

    /// Writes the labeled-pair CSV with four-decimal scores.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), DatasetError> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(CSV_HEADER)?;
        for p in &self.pairs {
            let s = &p.scores;
            w.write_record([
                p.pair.source.as_str(),
                p.pair.target.as_str(),
                &format!("{:.4}", s.ned),
                &format!("{:.4}", s.cos),
                &format!("{:.4}", s.jws),
                &format!("{:.4}", s.avg),
                &p.label.index().to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads a labeled-pair CSV. Labels are taken from the file as written;
    /// scores carry the file's four-decimal precision.
    pub fn read_csv<R: Read>(
        reader: R,
        language_pair: LanguagePair,
        threshold: Threshold,
        origin: Origin,
    ) -> Result<Self, DatasetError> {
        let mut r = csv::Reader::from_reader(reader);
        let header = r.headers()?.clone();
        if header.iter().ne(CSV_HEADER) {
            return Err(DatasetError::Csv { row: 1, reason: format!("unexpected header {:?}", header.iter().collect::<Vec<_>>()) });
        }
        let mut pairs = Vec::new();
        for (idx, record) in r.records().enumerate() {
            let row = idx + 2;
            let record = record?;
            let bad = |reason: String| DatasetError::Csv { row, reason };
            if record.len() != CSV_HEADER.len() {
                return Err(bad(format!("expected {} fields, got {}", CSV_HEADER.len(), record.len())));
            }
            let word = |i: usize, lang| NormalizedWord::new(&record[i], lang).map_err(|e| bad(e.to_string()));
            let source = word(0, language_pair.source())?;
            let target = word(1, language_pair.target())?;
            let num = |i: usize| record[i].parse::<f64>().map_err(|e| bad(format!("{}: {e}", CSV_HEADER[i])));
            let scores = SimilarityScores { ned: num(2)?, cos: num(3)?, jws: num(4)?, avg: num(5)? };
            let label = record[6]
                .parse::<usize>()
                .ok()
                .and_then(Label::from_index)
                .ok_or_else(|| bad(format!("label {:?} is not 0 or 1", &record[6])))?;
            pairs.push(LabeledPair { pair: WordPair::new(source, target, origin), scores, label });
        }
        Self::new(pairs, language_pair, threshold)
    }
}

/// Scores every pair and labels it by `avg >= threshold`.
pub fn score_and_label(
    pairs: &[WordPair],
    language_pair: LanguagePair,
    threshold: Threshold,
    cfg: JaroWinklerConfig,
) -> LabeledDataset {
    let labeled = par::map(pairs, |p| {
        let scores = score_pair(&p.source, &p.target, cfg);
        LabeledPair { pair: p.clone(), scores, label: threshold.label(scores.avg) }
    });
    LabeledDataset { pairs: dedup_sorted(labeled), language_pair, threshold }
}

/// Number of (source, target) tuples present in both lists.
pub fn count_exact_matches<A: PairKey, B: PairKey>(a: &[A], b: &[B]) -> usize {
    let keys: HashSet<(&str, &str)> = a.iter().map(PairKey::key).collect();
    let other: HashSet<(&str, &str)> = b.iter().map(PairKey::key).collect();
    keys.intersection(&other).count()
}

impl PairKey for (String, String) {
    fn key(&self) -> (&str, &str) {
        (&self.0, &self.1)
    }
}

/// Reads the `source_word` and `target_word` columns of any pair CSV,
/// ignoring the other columns.
pub fn read_pair_list<R: Read>(reader: R) -> Result<Vec<(String, String)>, DatasetError> {
    let mut r = csv::Reader::from_reader(reader);
    let header = r.headers()?.clone();
    let column = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| DatasetError::Csv { row: 1, reason: format!("missing column {name}") })
    };
    let (s, t) = (column(CSV_HEADER[0])?, column(CSV_HEADER[1])?);
    let mut out = Vec::new();
    for (idx, record) in r.records().enumerate() {
        let record = record?;
        match (record.get(s), record.get(t)) {
            (Some(a), Some(b)) => out.push((a.to_string(), b.to_string())),
            _ => return Err(DatasetError::Csv { row: idx + 2, reason: "missing word column".into() }),
        }
    }
    Ok(out)
}

/// Appends a seeded random `fraction` of `wn` to `pc`, skipping pairs `pc`
/// already holds.
///
/// The sample is the prefix of one seeded permutation of `wn`, so for a
/// fixed seed the pairs added at 0.4 include those added at 0.2.
pub fn merge_chunks(pc: &LabeledDataset, wn: &LabeledDataset, fraction: f64, seed: u64) -> Result<LabeledDataset, DatasetError> {
    if pc.language_pair != wn.language_pair {
        return Err(DatasetError::MismatchedLanguagePair(pc.language_pair, wn.language_pair));
    }
    if pc.threshold != wn.threshold {
        return Err(DatasetError::MismatchedThreshold(pc.threshold.0, wn.threshold.0));
    }
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(DatasetError::InvalidFraction(fraction));
    }
    let take = (fraction * wn.len() as f64).round() as usize;
    let mut order: Vec<usize> = (0..wn.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let present: HashSet<(&str, &str)> = pc.pairs.iter().map(PairKey::key).collect();
    let mut merged = pc.pairs.clone();
    merged.extend(order[..take].iter().map(|&i| &wn.pairs[i]).filter(|p| !present.contains(&p.key())).cloned());
    Ok(LabeledDataset { pairs: dedup_sorted(merged), language_pair: pc.language_pair, threshold: pc.threshold })
}
