use std::collections::HashMap;
use std::sync::LazyLock;

use unicode_general_category::{get_general_category, GeneralCategory};
use unicode_normalization::UnicodeNormalization;

use super::{Language, Script};

const ZWNJ: char = '\u{200C}';
const ZWJ: char = '\u{200D}';
const ZWSP: char = '\u{200B}';
const TATWEEL: char = '\u{0640}';

pub(crate) fn is_assigned(ch: char) -> bool {
    get_general_category(ch) != GeneralCategory::Unassigned
}

/// (base, nukta) -> precomposed letter, for every Indic letter whose
/// canonical decomposition is a consonant followed by its script's nukta.
/// Most of these are composition exclusions, so NFC leaves them decomposed.
static NUKTA_PAIRS: LazyLock<HashMap<(char, char), char>> = LazyLock::new(|| {
    let mut map = HashMap::new();
    let scripts = [
        Script::Devanagari,
        Script::Bengali,
        Script::Gurmukhi,
        Script::Gujarati,
        Script::Tamil,
        Script::Telugu,
        Script::Malayalam,
    ];
    for script in scripts {
        let base = script.block_base().unwrap();
        let Some(nukta) = char::from_u32(base + 0x3C) else { continue };
        for cp in base..base + 0x80 {
            let Some(ch) = char::from_u32(cp) else { continue };
            let mut parts = Vec::with_capacity(2);
            unicode_normalization::char::decompose_canonical(ch, |c| parts.push(c));
            if let [b, n] = parts[..] {
                if n == nukta {
                    map.insert((b, n), ch);
                }
            }
        }
    }
    map
});

/// Replaces consonant + nukta sequences by their precomposed letters.
pub fn compose_nukta(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if let Some(&next) = chars.peek() {
            if let Some(&composed) = NUKTA_PAIRS.get(&(c, next)) {
                out.push(composed);
                chars.next();
                continue;
            }
        }
        out.push(c);
    }
    out
}

pub(crate) fn is_stripped(ch: char) -> bool {
    use GeneralCategory::*;
    matches!(
        get_general_category(ch),
        ConnectorPunctuation
            | DashPunctuation
            | OpenPunctuation
            | ClosePunctuation
            | InitialPunctuation
            | FinalPunctuation
            | OtherPunctuation
            | MathSymbol
            | CurrencySymbol
            | ModifierSymbol
            | OtherSymbol
            | DecimalNumber
            | LetterNumber
            | OtherNumber
    )
}

/// Cleans raw text before transliteration.
///
/// Steps, in order: canonical composition, removal of zero-width
/// joiners/non-joiners, nukta composition, punctuation/digit/symbol
/// stripping, whitespace collapse and trim. Stripped characters become
/// word boundaries, so `"राम,श्याम"` yields two words rather than one.
/// Urdu additionally loses the tatweel (kashida) elongation mark.
pub fn normalize_text(text: &str, lang: Language) -> String {
    let composed: String = text.nfc().collect();
    let joined: String = composed
        .chars()
        .filter(|&c| c != ZWJ && c != ZWNJ && c != ZWSP)
        .filter(|&c| lang != Language::Ur || c != TATWEEL)
        .collect();
    let nukta = compose_nukta(&joined);
    let stripped: String = nukta.chars().map(|c| if is_stripped(c) { ' ' } else { c }).collect();
    stripped.split_whitespace().collect::<Vec<_>>().join(" ")
}
