use std::collections::HashMap;
use std::sync::LazyLock;

use super::normalize::{compose_nukta, is_assigned, is_stripped, normalize_text};
use super::rules::RuleTable;
use super::{Language, NormalizedWord, Script, ScriptError, DEVANAGARI_BASE};

const BUNDLED_EXCEPTIONS: [(Script, &str); 6] = [
    (Script::Bengali, include_str!("tables/bengali.tsv")),
    (Script::Gurmukhi, include_str!("tables/gurmukhi.tsv")),
    (Script::Gujarati, include_str!("tables/gujarati.tsv")),
    (Script::Tamil, include_str!("tables/tamil.tsv")),
    (Script::Telugu, include_str!("tables/telugu.tsv")),
    (Script::Malayalam, include_str!("tables/malayalam.tsv")),
];

const BUNDLED_URDU: &str = include_str!("tables/urdu.tsv");

static DEFAULT: LazyLock<Transliterator> = LazyLock::new(Transliterator::bundled);

/// Output of a lossy transliteration: the text plus every dropped
/// character and its position in the input.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transliteration {
    pub text: String,
    pub dropped: Vec<(char, usize)>,
}

/// Maps text of any supported language into Devanagari.
#[derive(Debug, Clone)]
pub struct Transliterator {
    exceptions: HashMap<Script, RuleTable>,
    urdu: RuleTable,
}

impl Default for Transliterator {
    fn default() -> Self {
        DEFAULT.clone()
    }
}

/// The Devanagari letter at the same block offset. Unassigned code points
/// and offsets landing on Devanagari punctuation or digits do not map.
fn block_offset(script: Script, base: u32, ch: char) -> Option<char> {
    if !script.contains(ch) || !is_assigned(ch) {
        return None;
    }
    let mapped = char::from_u32(ch as u32 - base + DEVANAGARI_BASE)?;
    (is_assigned(mapped) && !is_stripped(mapped)).then_some(mapped)
}

/// Characters every script passes through unchanged.
fn is_passthrough(ch: char) -> bool {
    ch.is_whitespace()
        || (ch.is_ascii() && !ch.is_ascii_alphabetic())
        || ch == '\u{200C}'
        || ch == '\u{200D}'
        || Script::Devanagari.contains(ch)
}

impl Transliterator {
    /// The exception and rule tables shipped with the crate.
    pub fn bundled() -> Self {
        let exceptions = BUNDLED_EXCEPTIONS
            .iter()
            .map(|&(script, text)| (script, RuleTable::parse(text).expect("bundled exception table")))
            .collect();
        let urdu = RuleTable::parse(BUNDLED_URDU).expect("bundled urdu table");
        Self { exceptions, urdu }
    }

    /// Replaces the exception table of a Brahmic script.
    pub fn with_exceptions(mut self, script: Script, table: RuleTable) -> Result<Self, ScriptError> {
        if !script.is_brahmic() || script == Script::Devanagari {
            return Err(ScriptError::NoExceptionTable(script));
        }
        self.exceptions.insert(script, table);
        Ok(self)
    }

    pub fn with_urdu_rules(mut self, table: RuleTable) -> Self {
        self.urdu = table;
        self
    }

    pub fn exceptions(&self, script: Script) -> Option<&RuleTable> {
        self.exceptions.get(&script)
    }

    pub fn urdu_rules(&self) -> &RuleTable {
        &self.urdu
    }

    /// Strict transliteration: fails on the first unmappable character.
    pub fn transliterate(&self, text: &str, lang: Language) -> Result<String, ScriptError> {
        let mut first = None;
        let out = self.run(text, lang, |ch, position| {
            first.get_or_insert(ScriptError::UnmappableCharacter { ch, position });
        });
        match first {
            Some(err) => Err(err),
            None => Ok(out),
        }
    }

    /// Drops unmappable characters instead of failing.
    pub fn transliterate_lossy(&self, text: &str, lang: Language) -> Transliteration {
        let mut dropped = Vec::new();
        let text = self.run(text, lang, |ch, pos| dropped.push((ch, pos)));
        Transliteration { text, dropped }
    }

    fn run(&self, text: &str, lang: Language, mut on_unmapped: impl FnMut(char, usize)) -> String {
        let script = lang.script();
        if script == Script::Devanagari {
            return text.to_string();
        }
        let chars: Vec<char> = text.chars().collect();
        let table = match script {
            Script::PersoArabic => Some(&self.urdu),
            s => self.exceptions.get(&s),
        };
        let base = script.block_base();
        let mut out = String::with_capacity(text.len());
        let mut pos = 0;
        while pos < chars.len() {
            if let Some(rule) = table.and_then(|t| t.longest_match(&chars, pos)) {
                out.push_str(&rule.target);
                pos += rule.source.len();
                continue;
            }
            let ch = chars[pos];
            match base.and_then(|b| block_offset(script, b, ch)) {
                Some(mapped) => out.push(mapped),
                None if is_passthrough(ch) => out.push(ch),
                None => on_unmapped(ch, pos),
            }
            pos += 1;
        }
        out
    }

    /// Normalize, transliterate and recompose nukta sequences.
    pub fn standardize(&self, raw: &str, lang: Language, lossy: bool) -> Result<Transliteration, ScriptError> {
        let cleaned = normalize_text(raw, lang);
        let mut result = if lossy {
            self.transliterate_lossy(&cleaned, lang)
        } else {
            Transliteration { text: self.transliterate(&cleaned, lang)?, dropped: Vec::new() }
        };
        let composed = compose_nukta(&result.text);
        result.text = composed.split_whitespace().collect::<Vec<_>>().join(" ");
        Ok(result)
    }

    /// Standardizes a single word; `Ok(None)` when nothing is left after
    /// cleaning.
    pub fn standardize_word(&self, raw: &str, lang: Language) -> Result<Option<NormalizedWord>, ScriptError> {
        let std = self.standardize(raw, lang, false)?;
        if std.text.is_empty() {
            return Ok(None);
        }
        NormalizedWord::new(std.text, lang).map(Some)
    }
}

/// Transliterates with the bundled tables.
pub fn transliterate_to_devanagari(text: &str, lang: Language) -> Result<String, ScriptError> {
    DEFAULT.transliterate(text, lang)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(text: &str, lang: Language) -> String {
        Transliterator::bundled().transliterate(text, lang).unwrap()
    }

    #[test]
    fn bengali_offset() {
        assert_eq!(tr("\u{0985}", Language::Bn), "\u{0905}");
        assert_eq!(tr("আম", Language::Bn), "आम");
    }

    #[test]
    fn devanagari_is_identity() {
        let s = "राम और श्याम abc";
        assert_eq!(tr(s, Language::Hi), s);
        assert_eq!(tr(s, Language::Mr), s);
    }

    #[test]
    fn telugu_word() {
        assert_eq!(tr("రాముడు", Language::Te), "रामुडु");
    }

    #[test]
    fn exception_rules_apply() {
        // khanda ta expands to ta + virama
        assert_eq!(tr("\u{09CE}", Language::Bn), "त्");
        // Assamese ra
        assert_eq!(tr("\u{09F0}", Language::Bn), "र");
        // Malayalam chillu n
        assert_eq!(tr("\u{0D7B}", Language::Ml), "न्");
        // Gurmukhi tippi and iri + vowel sign
        assert_eq!(tr("\u{0A70}", Language::Pa), "ं");
        assert_eq!(tr("\u{0A72}\u{0A40}", Language::Pa), "ई");
    }

    #[test]
    fn unmappable_reports_position() {
        let err = Transliterator::bundled().transliterate("আমx", Language::Bn).unwrap_err();
        assert_eq!(err, ScriptError::UnmappableCharacter { ch: 'x', position: 2 });
        let err = Transliterator::bundled().transliterate("کتاب€", Language::Ur).unwrap_err();
        assert_eq!(err, ScriptError::UnmappableCharacter { ch: '€', position: 4 });
    }

    #[test]
    fn unassigned_codepoints_do_not_offset_map() {
        // U+09E4 is reserved; its offset image is the danda
        let err = Transliterator::bundled().transliterate("\u{09E4}", Language::Bn).unwrap_err();
        assert_eq!(err, ScriptError::UnmappableCharacter { ch: '\u{09E4}', position: 0 });
    }

    #[test]
    fn lossy_drops_and_counts() {
        let t = Transliterator::bundled().transliterate_lossy("আxম", Language::Bn);
        assert_eq!(t.text, "आम");
        assert_eq!(t.dropped, vec![('x', 1)]);
    }

    #[test]
    fn urdu_rules() {
        let t = Transliterator::bundled();
        assert_eq!(t.standardize("کتاب", Language::Ur, false).unwrap().text, "कताब");
        assert_eq!(t.standardize("بھارت", Language::Ur, false).unwrap().text, "भारत");
        assert_eq!(t.standardize("اب", Language::Ur, false).unwrap().text, "अब");
        // nukta letters come out precomposed
        assert_eq!(t.standardize("خط", Language::Ur, false).unwrap().text, "\u{0959}त");
    }

    #[test]
    fn custom_tables_override() {
        let table = RuleTable::parse("U+0985\tआ\n").unwrap();
        let t = Transliterator::bundled().with_exceptions(Script::Bengali, table).unwrap();
        assert_eq!(t.transliterate("অ", Language::Bn).unwrap(), "आ");
        assert!(Transliterator::bundled().with_exceptions(Script::Devanagari, RuleTable::default()).is_err());
        let u = Transliterator::bundled().with_urdu_rules(RuleTable::parse("ب\tब\n").unwrap());
        assert!(u.transliterate("کتاب", Language::Ur).is_err());
    }

    #[test]
    fn standardize_word_handles_empty() {
        let t = Transliterator::bundled();
        assert_eq!(t.standardize_word("।", Language::Hi).unwrap(), None);
        let w = t.standardize_word(" আম, ", Language::Bn).unwrap().unwrap();
        assert_eq!(w.as_str(), "आम");
        assert_eq!(w.source_lang(), Language::Bn);
    }
}
