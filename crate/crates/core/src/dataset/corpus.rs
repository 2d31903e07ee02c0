use std::collections::{HashMap, HashSet};

use super::{dedup_sorted, BuildStats, DatasetError, LanguagePair, Origin, PairBuild, WordPair};
use crate::par;
use crate::script::{Language, NormalizedWord, Transliterator};

/// Tokens longer than this many code points are dropped.
pub const DEFAULT_MAX_TOKEN_LEN: usize = 48;

/// Minimum shared-token count for comparable-corpus alignment.
pub const DEFAULT_MIN_MATCHES: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusOptions {
    pub max_token_len: usize,
    /// Drop unmappable characters instead of failing.
    pub lossy: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        Self { max_token_len: DEFAULT_MAX_TOKEN_LEN, lossy: false }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenizedLine {
    pub tokens: Vec<NormalizedWord>,
    pub long_tokens_dropped: usize,
    pub chars_dropped: usize,
}

/// Standardizes a sentence and splits it on whitespace.
pub fn tokenize_line(
    line: &str,
    lang: Language,
    translit: &Transliterator,
    opts: CorpusOptions,
) -> Result<TokenizedLine, crate::script::ScriptError> {
    let std = translit.standardize(line, lang, opts.lossy)?;
    let mut out = TokenizedLine { chars_dropped: std.dropped.len(), ..TokenizedLine::default() };
    for tok in std.text.split_whitespace() {
        if tok.chars().count() > opts.max_token_len {
            out.long_tokens_dropped += 1;
            continue;
        }
        // standardize() only leaves Devanagari and passthrough characters
        match NormalizedWord::new(tok, lang) {
            Ok(w) => out.tokens.push(w),
            Err(_) => out.chars_dropped += tok.chars().count(),
        }
    }
    Ok(out)
}

fn tokenize_side<S: AsRef<str> + Sync>(
    lines: &[S],
    lang: Language,
    side: &'static str,
    translit: &Transliterator,
    opts: CorpusOptions,
) -> Result<Vec<TokenizedLine>, DatasetError> {
    par::try_map_range(lines.len(), |i| {
        tokenize_line(lines[i].as_ref(), lang, translit, opts).map_err(|source| DatasetError::Script { side, line: i + 1, source })
    })
}

/// Cross product of tokens for every aligned sentence pair, deduplicated
/// and sorted.
pub fn build_pc_pairs<S: AsRef<str> + Sync>(
    src_sentences: &[S],
    tgt_sentences: &[S],
    language_pair: LanguagePair,
    translit: &Transliterator,
    opts: CorpusOptions,
) -> Result<PairBuild, DatasetError> {
    if src_sentences.len() != tgt_sentences.len() {
        return Err(DatasetError::LengthMismatch { source_lines: src_sentences.len(), target_lines: tgt_sentences.len() });
    }
    let src = tokenize_side(src_sentences, language_pair.source(), "source", translit, opts)?;
    let tgt = tokenize_side(tgt_sentences, language_pair.target(), "target", translit, opts)?;
    let mut stats = BuildStats::default();
    for t in src.iter().chain(&tgt) {
        stats.long_tokens_dropped += t.long_tokens_dropped;
        stats.chars_dropped += t.chars_dropped;
    }
    let per_line = par::map_range(src.len(), |i| {
        let mut pairs = Vec::with_capacity(src[i].tokens.len() * tgt[i].tokens.len());
        for s in &src[i].tokens {
            for t in &tgt[i].tokens {
                pairs.push(WordPair::new(s.clone(), t.clone(), Origin::PcData));
            }
        }
        pairs
    });
    let raw: Vec<WordPair> = per_line.into_iter().flatten().collect();
    stats.raw_pairs = raw.len();
    Ok(PairBuild { pairs: dedup_sorted(raw), stats })
}

/// Greedy line alignment of comparable articles by exact token overlap.
///
/// The overlap of two lines is the number of distinct tokens they share.
/// Candidate pairs with overlap at least `min_matches` (and at least one)
/// are taken highest overlap first, ties going to the earliest target line
/// and then the earliest source line; each line is used at most once.
/// Returns `(source_line, target_line)` sorted by source line.
pub fn align_comparable<S: AsRef<str> + Sync>(src: &[Vec<S>], tgt: &[Vec<S>], min_matches: usize) -> Vec<(usize, usize)> {
    let mut index: HashMap<&str, Vec<usize>> = HashMap::new();
    for (j, line) in tgt.iter().enumerate() {
        let distinct: HashSet<&str> = line.iter().map(AsRef::as_ref).collect();
        for tok in distinct {
            index.entry(tok).or_default().push(j);
        }
    }
    let floor = min_matches.max(1);
    let per_src = par::map_range(src.len(), |i| {
        let distinct: HashSet<&str> = src[i].iter().map(AsRef::as_ref).collect();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for tok in distinct {
            for &j in index.get(tok).map(Vec::as_slice).unwrap_or(&[]) {
                *counts.entry(j).or_default() += 1;
            }
        }
        counts.into_iter().filter(|&(_, c)| c >= floor).map(|(j, c)| (c, i, j)).collect::<Vec<_>>()
    });
    let mut candidates: Vec<(usize, usize, usize)> = per_src.into_iter().flatten().collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.2.cmp(&b.2)).then(a.1.cmp(&b.1)));
    let mut src_used = vec![false; src.len()];
    let mut tgt_used = vec![false; tgt.len()];
    let mut aligned = Vec::new();
    for (_, i, j) in candidates {
        if !src_used[i] && !tgt_used[j] {
            src_used[i] = true;
            tgt_used[j] = true;
            aligned.push((i, j));
        }
    }
    aligned.sort_unstable();
    aligned
}
