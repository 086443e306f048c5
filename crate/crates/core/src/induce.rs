//! Stop-lemma induction by set algebra.
//!
//! * Set A: the top-`k` entries of every published stop word list, mapped to
//!   lemmas and unioned.
//! * Set B: the union of the top-`k` lemmas of every corpus ranking.
//! * Set C: `A ∩ B`, ordered by lemma frequency summed over the Set B
//!   corpora (descending, codepoint tie-break).
//!
//! `k = usize::MAX` takes every entry, which turns Set B into "all corpus
//! lemmas".

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::freq::{rank_items, top_k, FrequencyTable, ItemKind, RankedList};
use crate::lemma::{gen_lemma, LemmaLexicon};
use crate::textfile::{content_lines, read_utf8};

pub const DEFAULT_K: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StopWordList {
    pub source_id: String,
    /// Published order, duplicates removed (first occurrence wins).
    pub entries: Vec<String>,
    /// Entries before in-list dedup.
    pub raw_count: usize,
    pub duplicates_removed: usize,
}

impl StopWordList {
    /// Normalizes entries (NFC, inner whitespace collapsed) and drops repeats.
    pub fn new<I, S>(source_id: &str, entries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        let mut raw_count = 0;
        for e in entries {
            let norm: String = e.as_ref().split_whitespace().collect::<Vec<_>>().join(" ").nfc().collect();
            if norm.is_empty() {
                continue;
            }
            raw_count += 1;
            if seen.insert(norm.clone()) {
                kept.push(norm);
            }
        }
        StopWordList {
            source_id: source_id.to_owned(),
            duplicates_removed: raw_count - kept.len(),
            raw_count,
            entries: kept,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One entry per line, `#` comments. An effectively empty file is an error.
pub fn load_stopword_list(path: &Path, source_id: &str) -> Result<StopWordList> {
    let text = read_utf8(path)?;
    let list = StopWordList::new(source_id, content_lines(&text).map(|(_, l)| l));
    if list.is_empty() {
        return Err(Error::EmptyList(path.to_path_buf()));
    }
    Ok(list)
}

/// Entries across all lists, before any dedup.
pub fn raw_entry_total(lists: &[StopWordList]) -> usize {
    lists.iter().map(|l| l.raw_count).sum()
}

/// Distinct entries across all lists.
pub fn combined_unique_total(lists: &[StopWordList]) -> usize {
    lists.iter().flat_map(|l| l.entries.iter()).collect::<HashSet<_>>().len()
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidArgument("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn build_set_a(lists: &[StopWordList], lex: &LemmaLexicon, k: usize) -> Result<BTreeSet<String>> {
    check_k(k)?;
    if lists.is_empty() {
        return Err(Error::InvalidArgument("Set A needs at least one stop word list".into()));
    }
    Ok(lists.iter().flat_map(|l| gen_lemma(l.entries.iter().take(k), lex)).collect())
}

pub fn build_set_b(rankings: &[RankedList], k: usize) -> Result<BTreeSet<String>> {
    check_k(k)?;
    if rankings.is_empty() {
        return Err(Error::InvalidArgument("Set B needs at least one corpus ranking".into()));
    }
    let mut set = BTreeSet::new();
    for r in rankings {
        set.extend(top_k(r, k)?.into_iter().map(str::to_owned));
    }
    Ok(set)
}

/// Lemma counts summed over the given corpus tables.
pub fn aggregate_counts(tables: &[FrequencyTable]) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    for t in tables {
        for (k, &v) in t.counts() {
            *out.entry(k.clone()).or_insert(0) += v;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StopLemma {
    pub lemma: String,
    pub aggregate_count: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionProvenance {
    pub list_ids: Vec<String>,
    pub corpus_ids: Vec<String>,
    pub k_a: usize,
    pub k_b: usize,
    pub lexicon_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StopLemmaList {
    pub lemmas: Vec<StopLemma>,
    pub provenance: InductionProvenance,
}

impl StopLemmaList {
    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.lemmas.iter().any(|l| l.lemma == lemma)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.lemmas.iter().map(|l| l.lemma.as_str())
    }

    /// One lemma per line, in list order.
    pub fn to_text(&self) -> String {
        self.iter().flat_map(|l| [l, "\n"]).collect()
    }
}

/// `A ∩ B` ordered by aggregate count (descending, codepoint tie-break).
pub fn build_final_list(
    set_a: &BTreeSet<String>,
    set_b: &BTreeSet<String>,
    aggregate_counts: &BTreeMap<String, u64>,
) -> Result<StopLemmaList> {
    let mut lemmas = set_a
        .intersection(set_b)
        .map(|l| {
            let count = aggregate_counts.get(l).copied().ok_or_else(|| Error::MissingCount(l.clone()))?;
            Ok(StopLemma { lemma: l.clone(), aggregate_count: count })
        })
        .collect::<Result<Vec<_>>>()?;
    lemmas.sort_by(|a, b| b.aggregate_count.cmp(&a.aggregate_count).then_with(|| a.lemma.cmp(&b.lemma)));
    Ok(StopLemmaList { lemmas, provenance: InductionProvenance::default() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionReport {
    pub raw_word_total: usize,
    pub deduped_word_total: usize,
    pub set_a_size: usize,
    pub set_b_size: usize,
    pub final_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Induction {
    pub list: StopLemmaList,
    pub report: InductionReport,
    pub set_a: BTreeSet<String>,
    pub set_b: BTreeSet<String>,
}

/// The whole pipeline. `corpus_lemmas` are per-corpus lemma tables; their
/// rankings feed Set B and their summed counts order the result.
pub fn induce(
    lists: &[StopWordList],
    corpus_lemmas: &[FrequencyTable],
    lex: &LemmaLexicon,
    k_a: usize,
    k_b: usize,
) -> Result<Induction> {
    if let Some(t) = corpus_lemmas.iter().find(|t| t.item_kind != ItemKind::Lemma) {
        return Err(Error::InvalidArgument(format!("table for {} holds words, not lemmas", t.source_id)));
    }
    let set_a = build_set_a(lists, lex, k_a)?;
    let rankings: Vec<RankedList> = corpus_lemmas.iter().map(rank_items).collect();
    let set_b = build_set_b(&rankings, k_b)?;
    let counts = aggregate_counts(corpus_lemmas);
    let mut list = build_final_list(&set_a, &set_b, &counts)?;
    list.provenance = InductionProvenance {
        list_ids: lists.iter().map(|l| l.source_id.clone()).collect(),
        corpus_ids: corpus_lemmas.iter().map(|t| t.source_id.clone()).collect(),
        k_a,
        k_b,
        lexicon_id: lex.id().to_owned(),
    };
    let report = InductionReport {
        raw_word_total: raw_entry_total(lists),
        deduped_word_total: combined_unique_total(lists),
        set_a_size: set_a.len(),
        set_b_size: set_b.len(),
        final_size: list.len(),
    };
    Ok(Induction { list, report, set_a, set_b })
}
