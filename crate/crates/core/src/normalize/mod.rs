//! First-name cleaning shared by the Wikidata and authorship sides of the
//! join.
//!
//! Steps, in order: ASCII transliteration, non-word characters to spaces,
//! whitespace collapsing, removal of single-character tokens, removal of
//! short all-uppercase tokens (unpunctuated initials), lower-casing.

mod table;

use std::fmt;

/// Cleaning knobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizeOptions {
    /// Longest all-uppercase token treated as initials. `0` removes every
    /// all-uppercase token of two or more letters.
    pub initials_max_len: usize,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            initials_max_len: 3,
        }
    }
}

/// A cleaned first name: lower-case ASCII tokens joined by single spaces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CleanName {
    text: String,
}

impl CleanName {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.text.split(' ')
    }

    pub fn token_count(&self) -> usize {
        self.tokens().count()
    }

    pub fn is_compound(&self) -> bool {
        self.text.contains(' ')
    }

    /// First element of a compound name; the name itself otherwise.
    pub fn first_token(&self) -> &str {
        self.text.split(' ').next().unwrap_or(&self.text)
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

impl fmt::Display for CleanName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Maps every code point through the built-in transliteration table.
///
/// ASCII passes through; characters outside ASCII and outside the table
/// (U+00A0..=U+024F) are dropped.
pub fn transliterate_ascii(raw: &str) -> String {
    if raw.is_ascii() {
        return raw.to_string();
    }
    let mut out = String::with_capacity(raw.len());
    for c in raw.chars() {
        let cp = c as u32;
        if c.is_ascii() {
            out.push(c);
        } else if (table::FIRST..=table::LAST).contains(&cp) {
            out.push_str(table::TABLE[(cp - table::FIRST) as usize]);
        }
    }
    out
}

fn is_initials(token: &str, max_len: usize) -> bool {
    let len = token.len();
    len >= 2 && (max_len == 0 || len <= max_len) && token.bytes().all(|b| b.is_ascii_uppercase())
}

/// Cleans a raw first name. `None` means nothing survived.
pub fn clean(raw: &str, opts: &NormalizeOptions) -> Option<CleanName> {
    let ascii = transliterate_ascii(raw);
    let spaced: String = ascii
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' {
                c
            } else {
                ' '
            }
        })
        .collect();
    let kept: Vec<String> = spaced
        .split_whitespace()
        .filter(|t| t.len() > 1)
        .filter(|t| !is_initials(t, opts.initials_max_len))
        .map(|t| t.to_ascii_lowercase())
        .collect();
    if kept.is_empty() {
        None
    } else {
        Some(CleanName {
            text: kept.join(" "),
        })
    }
}
