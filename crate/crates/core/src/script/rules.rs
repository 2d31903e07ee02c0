use std::path::Path;

use super::ScriptError;

/// One `<source>\t<target>` mapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub source: Vec<char>,
    pub target: String,
    /// Only applies at the start of a word.
    pub word_initial: bool,
}

/// Ordered grapheme rewrite rules with longest-match lookup.
///
/// File format: UTF-8, one rule per line, source and target separated by a
/// single tab. Lines starting with `#` and blank lines are ignored. Either
/// field may be written literally or as space-separated `U+XXXX` code
/// points; an empty target deletes the source. A leading `^` on the source
/// anchors the rule to the start of a word.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleTable {
    // sorted by descending source length, then file order
    rules: Vec<Rule>,
}

fn parse_field(field: &str, line: usize) -> Result<Vec<char>, ScriptError> {
    let tokens: Vec<&str> = field.split(' ').filter(|t| !t.is_empty()).collect();
    let escaped = !tokens.is_empty() && tokens.iter().all(|t| t.len() > 2 && t.get(..2).is_some_and(|p| p.eq_ignore_ascii_case("U+")));
    if !escaped {
        return Ok(field.chars().collect());
    }
    tokens
        .iter()
        .map(|t| {
            u32::from_str_radix(&t[2..], 16)
                .ok()
                .and_then(char::from_u32)
                .ok_or_else(|| ScriptError::RuleTable { line, reason: format!("bad code point {t:?}") })
        })
        .collect()
}

impl RuleTable {
    pub fn parse(text: &str) -> Result<Self, ScriptError> {
        let mut rules = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() || raw.starts_with('#') {
                continue;
            }
            let (src, tgt) = raw
                .split_once('\t')
                .ok_or_else(|| ScriptError::RuleTable { line, reason: "missing tab separator".into() })?;
            let (word_initial, src) = match src.strip_prefix('^') {
                Some(rest) => (true, rest),
                None => (false, src),
            };
            let source = parse_field(src, line)?;
            if source.is_empty() {
                return Err(ScriptError::RuleTable { line, reason: "empty source grapheme".into() });
            }
            let target = parse_field(tgt, line)?.into_iter().collect();
            rules.push(Rule { source, target, word_initial });
        }
        rules.sort_by_key(|r| std::cmp::Reverse(r.source.len()));
        Ok(Self { rules })
    }

    pub fn load(path: &Path) -> Result<Self, ScriptError> {
        let text = std::fs::read_to_string(path).map_err(|e| ScriptError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Longest rule whose source matches `text` at `pos`.
    pub fn longest_match(&self, text: &[char], pos: usize) -> Option<&Rule> {
        let at_word_start = pos == 0 || text[pos - 1].is_whitespace();
        self.rules
            .iter()
            .filter(|r| !r.word_initial || at_word_start)
            .find(|r| text[pos..].starts_with(&r.source))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literal_and_escaped_fields() {
        let t = RuleTable::parse("# comment\nبھ\tभ\nU+0628\tब\nU+064E\t\n\n^ا\tअ\n").unwrap();
        assert_eq!(t.len(), 4);
        let text: Vec<char> = "بھا".chars().collect();
        assert_eq!(t.longest_match(&text, 0).unwrap().target, "भ");
        let r = t.longest_match(&['\u{064E}'], 0).unwrap();
        assert_eq!(r.target, "");
    }

    #[test]
    fn word_initial_rules_need_word_start() {
        let t = RuleTable::parse("^ا\tअ\nا\tा\n").unwrap();
        let text: Vec<char> = "اب ا".chars().collect();
        assert_eq!(t.longest_match(&text, 0).unwrap().target, "अ");
        assert_eq!(t.longest_match(&text, 3).unwrap().target, "अ");
        let mid: Vec<char> = "با".chars().collect();
        assert_eq!(t.longest_match(&mid, 1).unwrap().target, "ा");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(RuleTable::parse("abc\n"), Err(ScriptError::RuleTable { line: 1, .. })));
        assert!(matches!(RuleTable::parse("\tx\n"), Err(ScriptError::RuleTable { line: 1, .. })));
        assert!(matches!(RuleTable::parse("U+ZZZZ\tx\n"), Err(ScriptError::RuleTable { line: 1, .. })));
    }
}
