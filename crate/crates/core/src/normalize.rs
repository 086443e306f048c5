//! Text preprocessing: Unicode normalization, sentence splitting,
//! tokenization and token filtering.
//!
//! Everything here works on NFC text. [`normalize_text`] is the only
//! function that rewrites characters; the rest slice their input and report
//! byte spans into it.
//!
//! Tokens are maximal runs of word characters (letters, digits, combining
//! marks, ZWJ/ZWNJ). A run is cut where its script changes between
//! Devanagari, ASCII and anything else, so `"abcघर"` yields two tokens while
//! a whitespace-free Devanagari string always stays whole: compounds and
//! sandhi forms are never segmented. Every other non-space character is a
//! one-character [`TokenKind::Symbol`].

use std::borrow::Cow;

use serde::{Deserialize, Serialize};
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::{is_nfc_quick, IsNormalized, UnicodeNormalization};

const ZWNJ: char = '\u{200C}';
const ZWJ: char = '\u{200D}';
const DANDA: char = '\u{0964}';
const DOUBLE_DANDA: char = '\u{0965}';

/// Byte offsets `[start, end)` into a source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn slice<'a>(&self, text: &'a str) -> &'a str {
        &text[self.start..self.end]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    DevanagariWord,
    LatinWord,
    LatinNumber,
    DevanagariNumber,
    Symbol,
    /// Letters or digits from any script other than Devanagari and ASCII.
    OtherScript,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub span: Span,
    pub tokens: Vec<Token>,
}

/// Which token kinds [`filter_tokens`] removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct FilterPolicy {
    pub drop_symbols: bool,
    pub drop_latin_words: bool,
    pub drop_latin_numbers: bool,
    pub drop_devanagari_digits: bool,
    pub drop_other_scripts: bool,
}

impl Default for FilterPolicy {
    fn default() -> Self {
        FilterPolicy {
            drop_symbols: true,
            drop_latin_words: true,
            drop_latin_numbers: true,
            drop_devanagari_digits: false,
            drop_other_scripts: true,
        }
    }
}

impl FilterPolicy {
    /// Keeps every token.
    pub fn keep_all() -> Self {
        FilterPolicy {
            drop_symbols: false,
            drop_latin_words: false,
            drop_latin_numbers: false,
            drop_devanagari_digits: false,
            drop_other_scripts: false,
        }
    }

    pub fn keeps(&self, kind: TokenKind) -> bool {
        match kind {
            TokenKind::DevanagariWord => true,
            TokenKind::DevanagariNumber => !self.drop_devanagari_digits,
            TokenKind::LatinWord => !self.drop_latin_words,
            TokenKind::LatinNumber => !self.drop_latin_numbers,
            TokenKind::Symbol => !self.drop_symbols,
            TokenKind::OtherScript => !self.drop_other_scripts,
        }
    }
}

/// NFC-normalizes `raw` and collapses every run of Unicode whitespace into a
/// single U+0020. No other character is rewritten; leading and trailing
/// whitespace is collapsed, not trimmed.
pub fn normalize_text(raw: &str) -> String {
    let composed: Cow<'_, str> = match is_nfc_quick(raw.chars()) {
        IsNormalized::Yes => Cow::Borrowed(raw),
        _ => Cow::Owned(raw.nfc().collect()),
    };

    let mut out = String::with_capacity(composed.len());
    let mut in_space = false;
    for c in composed.chars() {
        if c.is_whitespace() {
            if !in_space {
                out.push(' ');
                in_space = true;
            }
        } else {
            out.push(c);
            in_space = false;
        }
    }
    out
}

fn is_terminator(c: char) -> bool {
    matches!(c, DANDA | DOUBLE_DANDA | '?' | '!' | '.')
}

/// Splits normalized text into sentence spans.
///
/// A sentence runs from its first non-space character through the run of
/// terminators that ends it; trailing text without a terminator forms a
/// final sentence. Whitespace between sentences belongs to no span.
pub fn split_sentences(text: &str) -> Vec<Span> {
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    // end of the last non-space character seen in the current sentence
    let mut content_end = 0;
    let mut chars = text.char_indices().peekable();

    while let Some((i, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        if start.is_none() {
            start = Some(i);
        }
        content_end = i + c.len_utf8();
        if is_terminator(c) {
            while let Some(&(j, next)) = chars.peek() {
                if !is_terminator(next) {
                    break;
                }
                content_end = j + next.len_utf8();
                chars.next();
            }
            spans.push(Span::new(start.take().unwrap_or(i), content_end));
        }
    }
    if let Some(s) = start {
        spans.push(Span::new(s, content_end));
    }
    spans
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Script {
    Devanagari,
    Ascii,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CharClass {
    Space,
    Word(Script),
    /// Joiners and combining marks outside the Devanagari block continue
    /// whatever run they follow.
    Attach,
    Symbol,
}

fn is_devanagari_block(c: char) -> bool {
    ('\u{0900}'..='\u{097F}').contains(&c)
}

fn is_devanagari_digit(c: char) -> bool {
    ('\u{0966}'..='\u{096F}').contains(&c)
}

fn classify(c: char) -> CharClass {
    if c.is_ascii() {
        return if c.is_ascii_alphanumeric() {
            CharClass::Word(Script::Ascii)
        } else if c.is_whitespace() {
            CharClass::Space
        } else {
            CharClass::Symbol
        };
    }
    if is_devanagari_block(c) {
        return if c.is_alphanumeric() || is_combining_mark(c) {
            CharClass::Word(Script::Devanagari)
        } else {
            CharClass::Symbol
        };
    }
    if c.is_whitespace() {
        CharClass::Space
    } else if c == ZWJ || c == ZWNJ || is_combining_mark(c) {
        CharClass::Attach
    } else if c.is_alphanumeric() {
        CharClass::Word(Script::Other)
    } else {
        CharClass::Symbol
    }
}

struct Run {
    start: usize,
    script: Option<Script>,
    has_letter: bool,
}

impl Run {
    fn kind(&self) -> TokenKind {
        match self.script {
            Some(Script::Devanagari) if self.has_letter => TokenKind::DevanagariWord,
            Some(Script::Devanagari) => TokenKind::DevanagariNumber,
            Some(Script::Ascii) if self.has_letter => TokenKind::LatinWord,
            Some(Script::Ascii) => TokenKind::LatinNumber,
            Some(Script::Other) | None => TokenKind::OtherScript,
        }
    }
}

/// Walks `text` and reports `(kind, span)` for every token in order without
/// allocating. This is the single tokenization routine; [`tokenize`] and the
/// counting code are both built on it.
pub(crate) fn scan_tokens(text: &str, mut emit: impl FnMut(TokenKind, Span)) {
    let mut run: Option<Run> = None;

    for (i, c) in text.char_indices() {
        let class = classify(c);
        match class {
            CharClass::Word(script) => {
                let letter = match script {
                    Script::Devanagari => !is_devanagari_digit(c),
                    Script::Ascii => !c.is_ascii_digit(),
                    Script::Other => true,
                };
                match run.as_mut() {
                    Some(r) if r.script.is_none() || r.script == Some(script) => {
                        r.script = Some(script);
                        r.has_letter |= letter;
                    }
                    _ => {
                        if let Some(r) = run.take() {
                            emit(r.kind(), Span::new(r.start, i));
                        }
                        run = Some(Run { start: i, script: Some(script), has_letter: letter });
                    }
                }
            }
            CharClass::Attach => {
                if run.is_none() {
                    run = Some(Run { start: i, script: None, has_letter: false });
                }
            }
            CharClass::Space | CharClass::Symbol => {
                if let Some(r) = run.take() {
                    emit(r.kind(), Span::new(r.start, i));
                }
                if class == CharClass::Symbol {
                    emit(TokenKind::Symbol, Span::new(i, i + c.len_utf8()));
                }
            }
        }
    }
    if let Some(r) = run.take() {
        emit(r.kind(), Span::new(r.start, text.len()));
    }
}

fn nfc_surface(s: &str) -> String {
    match is_nfc_quick(s.chars()) {
        IsNormalized::Yes => s.to_owned(),
        _ => s.nfc().collect(),
    }
}

/// Tokenizes normalized text. Spans are byte offsets into `text`.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    scan_tokens(text, |kind, span| {
        tokens.push(Token { surface: nfc_surface(span.slice(text)), kind, span });
    });
    tokens
}

/// Drops the tokens `policy` rejects, preserving order.
pub fn filter_tokens(tokens: Vec<Token>, policy: &FilterPolicy) -> Vec<Token> {
    tokens.into_iter().filter(|t| policy.keeps(t.kind)).collect()
}

/// Sentence split followed by tokenization of each sentence. Token spans are
/// relative to `text`, not to the sentence.
pub fn segment(text: &str) -> Vec<Sentence> {
    split_sentences(text)
        .into_iter()
        .map(|span| {
            let mut tokens = tokenize(span.slice(text));
            for t in &mut tokens {
                t.span = Span::new(t.span.start + span.start, t.span.end + span.start);
            }
            Sentence { span, tokens }
        })
        .collect()
}

/// Runs the full preprocessing pipeline over one raw document and hands
/// each surviving token surface to `visit`.
pub fn for_each_kept_token(raw: &str, policy: &FilterPolicy, mut visit: impl FnMut(&str)) {
    let text = normalize_text(raw);
    for sentence in split_sentences(&text) {
        let body = sentence.slice(&text);
        scan_tokens(body, |kind, span| {
            if policy.keeps(kind) {
                let surface = span.slice(body);
                match is_nfc_quick(surface.chars()) {
                    IsNormalized::Yes => visit(surface),
                    _ => visit(&nfc_surface(surface)),
                }
            }
        });
    }
}
