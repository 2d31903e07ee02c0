use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ModelError;
use crate::dataset::LabeledDataset;

pub const WORD_UNK: usize = 0;
pub const CHAR_PAD: usize = 0;
pub const CHAR_UNK: usize = 1;

/// Word-level vocabulary; id 0 is UNK. Serialized as its token list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordVocab {
    tokens: Vec<String>,
    ids: HashMap<String, usize>,
}

impl WordVocab {
    fn from_tokens(tokens: Vec<String>) -> Self {
        let ids = tokens.iter().enumerate().map(|(i, t)| (t.clone(), i + 1)).collect();
        Self { tokens, ids }
    }

    /// Size including UNK.
    pub fn len(&self) -> usize {
        self.tokens.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn id(&self, word: &str) -> usize {
        self.ids.get(word).copied().unwrap_or(WORD_UNK)
    }

    /// Tokens in id order, excluding UNK.
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }
}

impl Serialize for WordVocab {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.tokens.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WordVocab {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<String>::deserialize(d).map(Self::from_tokens)
    }
}

/// Character vocabulary; id 0 is PAD and id 1 is UNK.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharVocab {
    chars: Vec<char>,
    ids: HashMap<char, usize>,
}

impl CharVocab {
    fn from_chars(chars: Vec<char>) -> Self {
        let ids = chars.iter().enumerate().map(|(i, &c)| (c, i + 2)).collect();
        Self { chars, ids }
    }

    /// Size including PAD and UNK.
    pub fn len(&self) -> usize {
        self.chars.len() + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn id(&self, ch: char) -> usize {
        self.ids.get(&ch).copied().unwrap_or(CHAR_UNK)
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }
}

impl Serialize for CharVocab {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.chars.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharVocab {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<char>::deserialize(d).map(Self::from_chars)
    }
}

/// Separate source and target vocabularies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VocabPair<V> {
    pub source: V,
    pub target: V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VocabKind {
    Word,
    Char,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Vocabs {
    Word(VocabPair<WordVocab>),
    Char(VocabPair<CharVocab>),
}

fn first_occurrence<T: Clone + Eq + std::hash::Hash>(items: impl Iterator<Item = T>, min_count: usize) -> Vec<T> {
    let mut order = Vec::new();
    let mut counts: HashMap<T, usize> = HashMap::new();
    for item in items {
        let c = counts.entry(item.clone()).or_insert(0);
        if *c == 0 {
            order.push(item);
        }
        *c += 1;
    }
    order.retain(|t| counts[t] >= min_count);
    order
}

/// Word vocabularies keeping words seen at least `min_count` times on
/// their side; ids follow first occurrence.
pub fn build_word_vocabs(dataset: &LabeledDataset, min_count: usize) -> Result<VocabPair<WordVocab>, ModelError> {
    if dataset.is_empty() {
        return Err(ModelError::EmptyDataset);
    }
    let side = |f: fn(&crate::dataset::LabeledPair) -> &str| {
        WordVocab::from_tokens(first_occurrence(dataset.pairs().iter().map(|p| f(p).to_string()), min_count.max(1)))
    };
    Ok(VocabPair { source: side(|p| p.pair.source.as_str()), target: side(|p| p.pair.target.as_str()) })
}

pub fn build_char_vocabs(dataset: &LabeledDataset) -> Result<VocabPair<CharVocab>, ModelError> {
    if dataset.is_empty() {
        return Err(ModelError::EmptyDataset);
    }
    let side = |f: fn(&crate::dataset::LabeledPair) -> &str| {
        CharVocab::from_chars(first_occurrence(dataset.pairs().iter().flat_map(|p| f(p).chars()), 1))
    };
    Ok(VocabPair { source: side(|p| p.pair.source.as_str()), target: side(|p| p.pair.target.as_str()) })
}

/// Every word or character seen on a side gets an id.
pub fn build_vocabs(dataset: &LabeledDataset, kind: VocabKind) -> Result<Vocabs, ModelError> {
    match kind {
        VocabKind::Word => build_word_vocabs(dataset, 1).map(Vocabs::Word),
        VocabKind::Char => build_char_vocabs(dataset).map(Vocabs::Char),
    }
}
