//! Lexicon-based lemmatization.
//!
//! A [`LemmaLexicon`] maps surface forms to lemmas. Lookup is total: a
//! surface the lexicon does not know is its own lemma. Lexicons are plain
//! TSV (`surface<TAB>lemma`, `#` comments), so the output of any external
//! lemmatizer can be exported into one.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::freq::FrequencyTable;
use crate::textfile::{content_lines, read_utf8};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaLexicon {
    id: String,
    entries: HashMap<String, String>,
}

fn nfc(s: &str) -> String {
    s.nfc().collect()
}

impl LemmaLexicon {
    /// An empty lexicon: every word is its own lemma.
    pub fn identity() -> Self {
        LemmaLexicon { id: "identity".to_owned(), entries: HashMap::new() }
    }

    /// Builds a lexicon from pairs. Repeating a pair is fine; mapping one
    /// surface to two lemmas is a conflict.
    pub fn from_pairs<I, S, L>(id: &str, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, L)>,
        S: AsRef<str>,
        L: AsRef<str>,
    {
        let mut lex = LemmaLexicon { id: id.to_owned(), entries: HashMap::new() };
        for (i, (surface, lemma)) in pairs.into_iter().enumerate() {
            lex.insert(Path::new(id), i + 1, surface.as_ref(), lemma.as_ref())?;
        }
        Ok(lex)
    }

    fn insert(&mut self, origin: &Path, line: usize, surface: &str, lemma: &str) -> Result<()> {
        let surface = nfc(surface.trim());
        let lemma = nfc(lemma.trim());
        if surface.is_empty() || lemma.is_empty() {
            return Err(Error::malformed(origin, line, "empty surface or lemma"));
        }
        match self.entries.get(&surface) {
            Some(existing) if *existing != lemma => Err(Error::Conflict {
                path: origin.to_path_buf(),
                line,
                key: surface,
                existing: existing.clone(),
                conflicting: lemma,
            }),
            Some(_) => Ok(()),
            None => {
                self.entries.insert(surface, lemma);
                Ok(())
            }
        }
    }

    /// Replaces the identifier recorded in provenance.
    pub fn set_id(&mut self, id: &str) {
        self.id = id.to_owned();
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains_key(surface)
    }

    /// Lemma of `word`, falling back to `word` itself.
    pub fn lemma_of<'a>(&'a self, word: &'a str) -> &'a str {
        self.entries.get(word).map(String::as_str).unwrap_or(word)
    }

    pub fn lemmatize<'a>(&'a self, word: &'a str) -> Result<&'a str> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.lemma_of(word))
    }

    /// Lemmatizes a multi-word entry token by token on whitespace and rejoins
    /// with single spaces.
    pub fn lemmatize_phrase(&self, phrase: &str) -> String {
        let mut words = phrase.split_whitespace();
        let Some(first) = words.next() else { return String::new() };
        let mut out = self.lemma_of(first).to_owned();
        for w in words {
            out.push(' ');
            out.push_str(self.lemma_of(w));
        }
        out
    }

    /// Share of the table's types that fall back to identity, and the share
    /// of its tokens they account for.
    pub fn oov_rate(&self, words: &FrequencyTable) -> OovRate {
        let mut types = 0;
        let mut tokens = 0;
        for (w, &c) in words.counts() {
            if !self.contains(w) {
                types += 1;
                tokens += c;
            }
        }
        OovRate {
            oov_types: types,
            total_types: words.unique_count(),
            oov_tokens: tokens,
            total_tokens: words.total_tokens(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OovRate {
    pub oov_types: usize,
    pub total_types: usize,
    pub oov_tokens: u64,
    pub total_tokens: u64,
}

impl OovRate {
    pub fn type_rate(&self) -> f64 {
        if self.total_types == 0 {
            0.0
        } else {
            self.oov_types as f64 / self.total_types as f64
        }
    }

    pub fn token_rate(&self) -> f64 {
        if self.total_tokens == 0 {
            0.0
        } else {
            self.oov_tokens as f64 / self.total_tokens as f64
        }
    }
}

pub fn load_lexicon(path: &Path) -> Result<LemmaLexicon> {
    let text = read_utf8(path)?;
    let mut lex = LemmaLexicon { id: path.display().to_string(), entries: HashMap::new() };
    for (n, line) in content_lines(&text) {
        let mut fields = line.split('\t');
        match (fields.next(), fields.next(), fields.next()) {
            (Some(surface), Some(lemma), None) => lex.insert(path, n, surface, lemma)?,
            _ => return Err(Error::malformed(path, n, "expected `surface<TAB>lemma`")),
        }
    }
    Ok(lex)
}

/// Image of `words` under the lexicon. Multi-word entries are lemmatized
/// token by token; blank entries are skipped.
pub fn gen_lemma<I, S>(words: I, lex: &LemmaLexicon) -> BTreeSet<String>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    words.into_iter().map(|w| lex.lemmatize_phrase(w.as_ref())).filter(|l| !l.is_empty()).collect()
}
