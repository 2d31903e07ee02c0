//! Script standardization: everything is compared in Devanagari.
//!
//! Text from the eleven supported languages is first cleaned by
//! [`normalize_text`] and then mapped into the Devanagari block by a
//! [`Transliterator`]. Brahmic scripts map by fixed block offset plus a small
//! exception table; Urdu goes through an editable rule table.

mod normalize;
mod rules;
mod translit;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use normalize::{compose_nukta, normalize_text};
pub use rules::{Rule, RuleTable};
pub use translit::{transliterate_to_devanagari, Transliteration, Transliterator};

/// Start of the Devanagari Unicode block.
pub const DEVANAGARI_BASE: u32 = 0x0900;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScriptError {
    #[error("unmappable character U+{:04X} ({ch:?}) at position {position}", *ch as u32)]
    UnmappableCharacter { ch: char, position: usize },
    #[error("unknown language code {0:?}")]
    UnknownLanguage(String),
    #[error("invalid word {text:?}: {reason}")]
    InvalidWord { text: String, reason: &'static str },
    #[error("rule table line {line}: {reason}")]
    RuleTable { line: usize, reason: String },
    #[error("{0} has no exception table (it maps by identity or by rule table)")]
    NoExceptionTable(Script),
    #[error("reading rule table: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Script {
    Devanagari,
    Bengali,
    Gurmukhi,
    Gujarati,
    Tamil,
    Telugu,
    Malayalam,
    PersoArabic,
}

impl Script {
    /// First code point of the script's 128-slot Unicode block, for the
    /// Brahmic scripts that share the ISCII-derived layout.
    pub fn block_base(self) -> Option<u32> {
        match self {
            Script::Devanagari => Some(0x0900),
            Script::Bengali => Some(0x0980),
            Script::Gurmukhi => Some(0x0A00),
            Script::Gujarati => Some(0x0A80),
            Script::Tamil => Some(0x0B80),
            Script::Telugu => Some(0x0C00),
            Script::Malayalam => Some(0x0D00),
            Script::PersoArabic => None,
        }
    }

    pub fn is_brahmic(self) -> bool {
        self.block_base().is_some()
    }

    pub fn contains(self, ch: char) -> bool {
        match self.block_base() {
            Some(base) => (base..base + 0x80).contains(&(ch as u32)),
            None => matches!(ch as u32, 0x0600..=0x06FF | 0x0750..=0x077F | 0xFB50..=0xFDFF | 0xFE70..=0xFEFF),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Language {
    Hi,
    Mr,
    Bn,
    Pa,
    Gu,
    Sa,
    Ml,
    Ta,
    Te,
    Ne,
    Ur,
}

impl Language {
    pub const ALL: [Language; 11] = [
        Language::Hi,
        Language::Mr,
        Language::Bn,
        Language::Pa,
        Language::Gu,
        Language::Sa,
        Language::Ml,
        Language::Ta,
        Language::Te,
        Language::Ne,
        Language::Ur,
    ];

    pub fn script(self) -> Script {
        match self {
            Language::Hi | Language::Mr | Language::Sa | Language::Ne => Script::Devanagari,
            Language::Bn => Script::Bengali,
            Language::Pa => Script::Gurmukhi,
            Language::Gu => Script::Gujarati,
            Language::Ta => Script::Tamil,
            Language::Te => Script::Telugu,
            Language::Ml => Script::Malayalam,
            Language::Ur => Script::PersoArabic,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Language::Hi => "Hi",
            Language::Mr => "Mr",
            Language::Bn => "Bn",
            Language::Pa => "Pa",
            Language::Gu => "Gu",
            Language::Sa => "Sa",
            Language::Ml => "Ml",
            Language::Ta => "Ta",
            Language::Te => "Te",
            Language::Ne => "Ne",
            Language::Ur => "Ur",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Language {
    type Err = ScriptError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Language::ALL
            .into_iter()
            .find(|l| l.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ScriptError::UnknownLanguage(s.to_string()))
    }
}

/// Characters allowed in a [`NormalizedWord`] besides the Devanagari block.
fn is_common_char(ch: char) -> bool {
    ch == ' ' || ch.is_ascii_punctuation()
}

/// A word that has been normalized and standardized into Devanagari.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizedWord {
    text: String,
    source_lang: Language,
}

impl NormalizedWord {
    /// Validates already-standardized text. Use [`Transliterator::standardize_word`]
    /// to go from raw input to a word.
    pub fn new(text: impl Into<String>, source_lang: Language) -> Result<Self, ScriptError> {
        let text = text.into();
        let invalid = |reason| ScriptError::InvalidWord { text: text.clone(), reason };
        if text.is_empty() {
            return Err(invalid("empty"));
        }
        if text.trim() != text {
            return Err(invalid("leading or trailing whitespace"));
        }
        if !text.chars().all(|c| Script::Devanagari.contains(c) || is_common_char(c)) {
            return Err(invalid("character outside Devanagari"));
        }
        Ok(Self { text, source_lang })
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn source_lang(&self) -> Language {
        self.source_lang
    }

    pub fn char_len(&self) -> usize {
        self.text.chars().count()
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

impl fmt::Display for NormalizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl AsRef<str> for NormalizedWord {
    fn as_ref(&self) -> &str {
        &self.text
    }
}
