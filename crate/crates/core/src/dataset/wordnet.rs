use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use super::{dedup_sorted, BuildStats, DatasetError, Origin, PairBuild, WordPair};
use crate::par;
use crate::script::{Language, NormalizedWord, Transliterator};

/// One concept's words in one language. Ids are shared across linked
/// wordnets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synset {
    pub id: u64,
    pub lang: Language,
    pub words: Vec<NormalizedWord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedLine {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectedWord {
    pub line: usize,
    pub word: String,
    pub reason: String,
}

/// Parsed synsets, sorted by id, plus everything that was skipped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordnetParse {
    pub synsets: Vec<Synset>,
    pub malformed: Vec<MalformedLine>,
    pub rejected_words: Vec<RejectedWord>,
}

/// Parses a wordnet TSV file: `<synset_id>\t<comma-separated words>`.
pub fn parse_wordnet(path: &Path, lang: Language, translit: &Transliterator) -> Result<WordnetParse, DatasetError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_wordnet_str(&text, lang, translit))
}

/// Lines repeating an id extend the earlier synset.
pub fn parse_wordnet_str(text: &str, lang: Language, translit: &Transliterator) -> WordnetParse {
    let mut by_id: BTreeMap<u64, Vec<NormalizedWord>> = BTreeMap::new();
    let mut out = WordnetParse::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let malformed = |reason: &str| MalformedLine { line, reason: reason.to_string() };
        let Some((id, words)) = raw.split_once('\t') else {
            out.malformed.push(malformed("missing tab after synset id"));
            continue;
        };
        let Ok(id) = id.trim().parse::<u64>() else {
            out.malformed.push(malformed("synset id is not an integer"));
            continue;
        };
        let mut parsed = Vec::new();
        for word in words.split(',').filter(|w| !w.trim().is_empty()) {
            match translit.standardize_word(word, lang) {
                Ok(Some(w)) => parsed.push(w),
                Ok(None) => {}
                Err(e) => out.rejected_words.push(RejectedWord { line, word: word.trim().to_string(), reason: e.to_string() }),
            }
        }
        if parsed.is_empty() {
            out.malformed.push(malformed("empty word list"));
            continue;
        }
        let entry = by_id.entry(id).or_default();
        for w in parsed {
            if !entry.contains(&w) {
                entry.push(w);
            }
        }
    }
    out.synsets = by_id.into_iter().map(|(id, words)| Synset { id, lang, words }).collect();
    out
}

/// Every source word x target word combination within each shared synset
/// id, deduplicated and sorted.
pub fn build_wn_pairs(src: &[Synset], tgt: &[Synset]) -> PairBuild {
    let mut targets: HashMap<u64, Vec<&NormalizedWord>> = HashMap::new();
    for s in tgt {
        targets.entry(s.id).or_default().extend(&s.words);
    }
    let per_synset = par::map(src, |s| {
        let Some(tw) = targets.get(&s.id) else { return Vec::new() };
        let mut pairs = Vec::with_capacity(s.words.len() * tw.len());
        for t in tw {
            for w in &s.words {
                pairs.push(WordPair::new(w.clone(), (*t).clone(), Origin::WnData));
            }
        }
        pairs
    });
    let raw: Vec<WordPair> = per_synset.into_iter().flatten().collect();
    let stats = BuildStats { raw_pairs: raw.len(), ..BuildStats::default() };
    PairBuild { pairs: dedup_sorted(raw), stats }
}
