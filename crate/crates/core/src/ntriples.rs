//! Line-oriented N-Triples parsing.
//!
//! The parser works on one line at a time and borrows from the line
//! wherever no escape sequence has to be resolved, so scanning a dump costs
//! one line buffer plus whatever the caller keeps. Lines that do not fit the
//! grammar are reported as [`LineError`] and never abort a stream.

use std::borrow::Cow;
use std::fmt;
use std::io::BufRead;

use crate::error::Result;

/// Object position of a statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object<'a> {
    Iri(Cow<'a, str>),
    Blank(Cow<'a, str>),
    Literal(Literal<'a>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal<'a> {
    /// Lexical form with escapes resolved.
    pub lexical: Cow<'a, str>,
    pub lang: Option<Cow<'a, str>>,
    pub datatype: Option<Cow<'a, str>>,
}

/// One parsed statement. Subject and predicate are always IRIs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple<'a> {
    pub subject: Cow<'a, str>,
    pub predicate: Cow<'a, str>,
    pub object: Object<'a>,
}

pub type OwnedTriple = Triple<'static>;

impl Triple<'_> {
    pub fn into_owned(self) -> OwnedTriple {
        Triple {
            subject: Cow::Owned(self.subject.into_owned()),
            predicate: Cow::Owned(self.predicate.into_owned()),
            object: match self.object {
                Object::Iri(s) => Object::Iri(Cow::Owned(s.into_owned())),
                Object::Blank(s) => Object::Blank(Cow::Owned(s.into_owned())),
                Object::Literal(l) => Object::Literal(Literal {
                    lexical: Cow::Owned(l.lexical.into_owned()),
                    lang: l.lang.map(|s| Cow::Owned(s.into_owned())),
                    datatype: l.datatype.map(|s| Cow::Owned(s.into_owned())),
                }),
            },
        }
    }
}

impl fmt::Display for Triple<'_> {
    /// Canonical N-Triples serialization, without the trailing newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> <{}> ", self.subject, self.predicate)?;
        match &self.object {
            Object::Iri(iri) => write!(f, "<{iri}>")?,
            Object::Blank(label) => write!(f, "_:{label}")?,
            Object::Literal(lit) => {
                write!(f, "\"{}\"", escape_literal(&lit.lexical))?;
                if let Some(lang) = &lit.lang {
                    write!(f, "@{lang}")?;
                } else if let Some(dt) = &lit.datatype {
                    write!(f, "^^<{dt}>")?;
                }
            }
        }
        f.write_str(" .")
    }
}

/// Why a line was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineError {
    pub column: usize,
    pub reason: &'static str,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.reason)
    }
}

impl std::error::Error for LineError {}

/// Escapes a string for use as a literal lexical form.
pub fn escape_literal(s: &str) -> Cow<'_, str> {
    if !s.contains(['\\', '"', '\n', '\r', '\t']) {
        return Cow::Borrowed(s);
    }
    let mut out = String::with_capacity(s.len() + 8);
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    Cow::Owned(out)
}

/// Parses a single line (without its line terminator).
///
/// Returns `Ok(None)` for blank and comment-only lines.
pub fn parse_line(line: &str) -> Result<Option<Triple<'_>>, LineError> {
    let mut cur = Cursor { src: line, pos: 0 };
    cur.skip_ws();
    if cur.at_end() || cur.peek() == Some(b'#') {
        return Ok(None);
    }

    let subject = match cur.peek() {
        Some(b'<') => cur.iri()?,
        _ => return Err(cur.err("subject must be an IRI")),
    };
    cur.skip_ws();
    let predicate = match cur.peek() {
        Some(b'<') => cur.iri()?,
        _ => return Err(cur.err("predicate must be an IRI")),
    };
    cur.skip_ws();
    let object = match cur.peek() {
        Some(b'<') => Object::Iri(cur.iri()?),
        Some(b'_') => Object::Blank(cur.blank()?),
        Some(b'"') => Object::Literal(cur.literal()?),
        _ => return Err(cur.err("expected object")),
    };
    cur.skip_ws();
    if cur.peek() != Some(b'.') {
        return Err(cur.err("expected '.'"));
    }
    cur.pos += 1;
    cur.skip_ws();
    if !cur.at_end() && cur.peek() != Some(b'#') {
        return Err(cur.err("trailing characters after '.'"));
    }

    Ok(Some(Triple {
        subject,
        predicate,
        object,
    }))
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn bytes(&self) -> &'a [u8] {
        self.src.as_bytes()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes().get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn err(&self, reason: &'static str) -> LineError {
        LineError {
            column: self.pos + 1,
            reason,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn iri(&mut self) -> Result<Cow<'a, str>, LineError> {
        debug_assert_eq!(self.peek(), Some(b'<'));
        self.pos += 1;
        let start = self.pos;
        let bytes = self.bytes();
        let mut has_escape = false;
        loop {
            match bytes.get(self.pos) {
                None => return Err(self.err("unterminated IRI")),
                Some(b'>') => break,
                Some(b'\\') => {
                    has_escape = true;
                    self.pos += 1;
                }
                Some(b' ' | b'<' | b'"' | b'{' | b'}' | b'|' | b'^' | b'`') => {
                    return Err(self.err("invalid character in IRI"))
                }
                Some(&b) if b < 0x20 => return Err(self.err("control character in IRI")),
                Some(_) => self.pos += 1,
            }
        }
        let raw = &self.src[start..self.pos];
        self.pos += 1;
        if raw.is_empty() {
            return Err(self.err("empty IRI"));
        }
        if !has_escape {
            return Ok(Cow::Borrowed(raw));
        }
        unescape(raw, false)
            .map(Cow::Owned)
            .map_err(|reason| LineError {
                column: start + 1,
                reason,
            })
    }

    fn blank(&mut self) -> Result<Cow<'a, str>, LineError> {
        if !self.src[self.pos..].starts_with("_:") {
            return Err(self.err("expected blank node label"));
        }
        self.pos += 2;
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | ':') {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        // a trailing '.' terminates the statement, not the label
        while self.pos > start && self.bytes()[self.pos - 1] == b'.' {
            self.pos -= 1;
        }
        if self.pos == start {
            return Err(self.err("empty blank node label"));
        }
        Ok(Cow::Borrowed(&self.src[start..self.pos]))
    }

    fn literal(&mut self) -> Result<Literal<'a>, LineError> {
        debug_assert_eq!(self.peek(), Some(b'"'));
        self.pos += 1;
        let start = self.pos;
        let bytes = self.bytes();
        let mut has_escape = false;
        loop {
            match bytes.get(self.pos) {
                None => return Err(self.err("unterminated literal")),
                Some(b'"') => break,
                Some(b'\\') => {
                    has_escape = true;
                    self.pos += 2;
                }
                Some(_) => self.pos += 1,
            }
        }
        if self.pos >= self.src.len() {
            return Err(self.err("unterminated literal"));
        }
        let raw = &self.src[start..self.pos];
        self.pos += 1;
        let lexical = if has_escape {
            Cow::Owned(unescape(raw, true).map_err(|reason| LineError {
                column: start + 1,
                reason,
            })?)
        } else {
            Cow::Borrowed(raw)
        };

        let mut lit = Literal {
            lexical,
            lang: None,
            datatype: None,
        };
        match self.peek() {
            Some(b'@') => {
                self.pos += 1;
                let tag_start = self.pos;
                while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'-') {
                    self.pos += 1;
                }
                let tag = &self.src[tag_start..self.pos];
                if !valid_lang_tag(tag) {
                    return Err(self.err("invalid language tag"));
                }
                lit.lang = Some(Cow::Borrowed(tag));
            }
            Some(b'^') => {
                if !self.src[self.pos..].starts_with("^^<") {
                    return Err(self.err("expected datatype IRI"));
                }
                self.pos += 2;
                lit.datatype = Some(self.iri()?);
            }
            _ => {}
        }
        Ok(lit)
    }
}

fn valid_lang_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let first = parts.next().unwrap_or("");
    !first.is_empty()
        && first.bytes().all(|b| b.is_ascii_alphabetic())
        && parts.all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_alphanumeric()))
}

/// Resolves `\uXXXX` / `\UXXXXXXXX` everywhere and the single-character
/// escapes when `echar` is set (literals only).
fn unescape(raw: &str, echar: bool) -> Result<String, &'static str> {
    let mut out = String::with_capacity(raw.len());
    let mut chars = raw.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        let esc = chars.next().ok_or("dangling backslash")?;
        let decoded = match esc {
            'u' => hex_scalar(&mut chars, 4)?,
            'U' => hex_scalar(&mut chars, 8)?,
            't' if echar => '\t',
            'b' if echar => '\u{8}',
            'n' if echar => '\n',
            'r' if echar => '\r',
            'f' if echar => '\u{c}',
            '"' if echar => '"',
            '\'' if echar => '\'',
            '\\' if echar => '\\',
            _ => return Err("invalid escape sequence"),
        };
        out.push(decoded);
    }
    Ok(out)
}

fn hex_scalar(chars: &mut std::str::Chars<'_>, digits: usize) -> Result<char, &'static str> {
    let mut value = 0u32;
    for _ in 0..digits {
        let d = chars
            .next()
            .and_then(|c| c.to_digit(16))
            .ok_or("invalid hex digit in escape")?;
        value = value * 16 + d;
    }
    char::from_u32(value).ok_or("escape is not a Unicode scalar value")
}

/// Counters kept while reading a stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseStats {
    pub lines_read: u64,
    pub lines_skipped_malformed: u64,
    pub triples: u64,
}

impl ParseStats {
    pub fn merge(&mut self, other: &ParseStats) {
        self.lines_read += other.lines_read;
        self.lines_skipped_malformed += other.lines_skipped_malformed;
        self.triples += other.triples;
    }
}

/// Outcome of looking at one raw line.
pub(crate) enum RawLine<'a> {
    Empty,
    Malformed,
    Triple(Triple<'a>),
}

/// Classifies a raw line; invalid UTF-8 counts as malformed.
pub(crate) fn classify(raw: &[u8]) -> RawLine<'_> {
    let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
    let Ok(line) = std::str::from_utf8(raw) else {
        return RawLine::Malformed;
    };
    match parse_line(line) {
        Ok(Some(t)) => RawLine::Triple(t),
        Ok(None) => RawLine::Empty,
        Err(_) => RawLine::Malformed,
    }
}

/// Sequential streaming reader yielding owned triples in file order.
///
/// Only one line is buffered at a time. Malformed lines are counted in
/// [`TripleReader::stats`] and skipped.
pub struct TripleReader<R> {
    reader: R,
    buf: Vec<u8>,
    stats: ParseStats,
}

impl<R: BufRead> TripleReader<R> {
    pub fn new(reader: R) -> Self {
        TripleReader {
            reader,
            buf: Vec::with_capacity(1024),
            stats: ParseStats::default(),
        }
    }

    pub fn stats(&self) -> ParseStats {
        self.stats
    }
}

impl<R: BufRead> Iterator for TripleReader<R> {
    type Item = Result<OwnedTriple>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.stats.lines_read += 1;
            let raw = self.buf.strip_suffix(b"\n").unwrap_or(&self.buf);
            match classify(raw) {
                RawLine::Empty => {}
                RawLine::Malformed => self.stats.lines_skipped_malformed += 1,
                RawLine::Triple(t) => {
                    self.stats.triples += 1;
                    return Some(Ok(t.into_owned()));
                }
            }
        }
    }
}
