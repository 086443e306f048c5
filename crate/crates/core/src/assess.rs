//! Coverage of a stop-lemma list by a translated external stop word list.
//!
//! The translation is supplied as a TSV mapping file:
//!
//! ```text
//! must	जरूर
//! the	वह,यह
//! being	!
//! ```
//!
//! `!` marks a word that could not be translated; such words are counted
//! but stay out of the coverage denominator.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::induce::StopLemmaList;
use crate::lemma::{gen_lemma, LemmaLexicon};
use crate::reference::ReferenceList;
use crate::textfile::{content_lines, read_utf8};

const UNTRANSLATABLE: &str = "!";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationMapping {
    pub pairs: BTreeMap<String, Vec<String>>,
    pub untranslatable: BTreeSet<String>,
}

impl TranslationMapping {
    /// Every external word maps to itself.
    pub fn identity<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        TranslationMapping {
            pairs: words
                .into_iter()
                .map(|w| {
                    let w = w.into();
                    (w.clone(), vec![w])
                })
                .collect(),
            untranslatable: BTreeSet::new(),
        }
    }

    pub fn external_total(&self) -> usize {
        self.pairs.len() + self.untranslatable.len()
    }

    /// All target forms, deduplicated.
    pub fn target_forms(&self) -> BTreeSet<&str> {
        self.pairs.values().flatten().map(String::as_str).collect()
    }
}

pub fn load_mapping(path: &Path) -> Result<TranslationMapping> {
    let text = read_utf8(path)?;
    let mut mapping = TranslationMapping::default();
    for (n, line) in content_lines(&text) {
        let (external, targets) = match line.split_once('\t') {
            Some((e, t)) if !e.trim().is_empty() && !t.trim().is_empty() && !t.contains('\t') => (e.trim(), t.trim()),
            _ => return Err(Error::malformed(path, n, "expected `external<TAB>form[,form...]` or `external<TAB>!`")),
        };
        let conflict = |existing: String| Error::Conflict {
            path: path.to_path_buf(),
            line: n,
            key: external.to_owned(),
            existing,
            conflicting: targets.to_owned(),
        };

        if targets == UNTRANSLATABLE {
            if let Some(prev) = mapping.pairs.get(external) {
                return Err(conflict(prev.join(",")));
            }
            mapping.untranslatable.insert(external.to_owned());
            continue;
        }

        let mut forms: Vec<String> = Vec::new();
        for f in targets.split(',') {
            let f: String = f.trim().nfc().collect();
            if f.is_empty() {
                return Err(Error::malformed(path, n, "empty target form"));
            }
            if !forms.contains(&f) {
                forms.push(f);
            }
        }
        if mapping.untranslatable.contains(external) {
            return Err(conflict(UNTRANSLATABLE.to_owned()));
        }
        match mapping.pairs.get(external) {
            Some(prev) if *prev != forms => return Err(conflict(prev.join(","))),
            Some(_) => {}
            None => {
                mapping.pairs.insert(external.to_owned(), forms);
            }
        }
    }
    Ok(mapping)
}

/// Membership test for anything that can serve as the reference list.
pub trait LemmaSet {
    fn contains_lemma(&self, lemma: &str) -> bool;
}

impl LemmaSet for StopLemmaList {
    fn contains_lemma(&self, lemma: &str) -> bool {
        self.contains(lemma)
    }
}

impl LemmaSet for ReferenceList {
    fn contains_lemma(&self, lemma: &str) -> bool {
        self.contains(lemma)
    }
}

impl LemmaSet for BTreeSet<String> {
    fn contains_lemma(&self, lemma: &str) -> bool {
        self.contains(lemma)
    }
}

impl LemmaSet for HashSet<String> {
    fn contains_lemma(&self, lemma: &str) -> bool {
        self.contains(lemma)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub external_total: usize,
    pub untranslatable_count: usize,
    pub mapped_lemma_set: BTreeSet<String>,
    pub hits: BTreeSet<String>,
    pub misses: BTreeSet<String>,
    /// `|hits| / |mapped_lemma_set|`; absent when nothing was mapped.
    pub coverage_ratio: Option<f64>,
}

impl CoverageReport {
    pub fn summary(&self) -> String {
        let ratio = match self.coverage_ratio {
            Some(r) => format!("{:.4}", r),
            None => "undefined".to_owned(),
        };
        let misses: Vec<&str> = self.misses.iter().map(String::as_str).collect();
        format!(
            "external words: {}\nuntranslatable: {}\nmapped lemmas: {}\npresent in list: {}\nabsent from list: {}\ncoverage: {}/{} = {}\nmisses: {}\n",
            self.external_total,
            self.untranslatable_count,
            self.mapped_lemma_set.len(),
            self.hits.len(),
            self.misses.len(),
            self.hits.len(),
            self.mapped_lemma_set.len(),
            ratio,
            misses.join(" "),
        )
    }
}

pub fn assess_coverage(mapping: &TranslationMapping, lex: &LemmaLexicon, list: &impl LemmaSet) -> CoverageReport {
    let mapped_lemma_set = gen_lemma(mapping.target_forms(), lex);
    let (hits, misses): (BTreeSet<String>, BTreeSet<String>) =
        mapped_lemma_set.iter().cloned().partition(|l| list.contains_lemma(l));
    let coverage_ratio = (!mapped_lemma_set.is_empty()).then(|| hits.len() as f64 / mapped_lemma_set.len() as f64);
    CoverageReport {
        external_total: mapping.external_total(),
        untranslatable_count: mapping.untranslatable.len(),
        mapped_lemma_set,
        hits,
        misses,
        coverage_ratio,
    }
}
