//! Raw-frequency tables and deterministic rankings.
//!
//! Counting is type-level: every surviving token of the preprocessing
//! pipeline adds one to its surface form. Lemma tables are derived from word
//! tables by summing the counts of surfaces sharing a lemma, which is the
//! same as lemmatizing each token before counting.
//!
//! Rankings order by count descending; equal counts are ordered by ascending
//! codepoint order of the item. UTF-8 byte order equals codepoint order, so
//! plain `str` comparison implements the tie rule.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusSource, Document};
use crate::error::{Error, Result};
use crate::lemma::LemmaLexicon;
use crate::normalize::{for_each_kept_token, FilterPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ItemKind {
    Word,
    Lemma,
}

impl ItemKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ItemKind::Word => "word",
            ItemKind::Lemma => "lemma",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    pub item_kind: ItemKind,
    pub source_id: String,
    counts: HashMap<String, u64>,
}

impl FrequencyTable {
    pub fn new(item_kind: ItemKind, source_id: &str) -> Self {
        FrequencyTable { item_kind, source_id: source_id.to_owned(), counts: HashMap::new() }
    }

    /// Builds a table from explicit counts; zero counts are dropped.
    pub fn from_counts<I, S>(item_kind: ItemKind, source_id: &str, counts: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let mut t = FrequencyTable::new(item_kind, source_id);
        for (item, c) in counts {
            t.add_owned(item.into(), c);
        }
        t
    }

    pub fn add(&mut self, item: &str, count: u64) {
        if count == 0 {
            return;
        }
        match self.counts.get_mut(item) {
            Some(c) => *c += count,
            None => {
                self.counts.insert(item.to_owned(), count);
            }
        }
    }

    fn add_owned(&mut self, item: String, count: u64) {
        if count > 0 {
            *self.counts.entry(item).or_insert(0) += count;
        }
    }

    /// Key-wise sum. Commutative and associative, so merge order never
    /// changes the result.
    pub fn merge(&mut self, other: FrequencyTable) {
        if self.counts.len() < other.counts.len() {
            let mine = std::mem::replace(&mut self.counts, other.counts);
            for (k, v) in mine {
                self.add_owned(k, v);
            }
        } else {
            for (k, v) in other.counts {
                self.add_owned(k, v);
            }
        }
    }

    pub fn get(&self, item: &str) -> u64 {
        self.counts.get(item).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &HashMap<String, u64> {
        &self.counts
    }

    pub fn total_tokens(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn unique_count(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Re-keys a word table by lemma.
    pub fn to_lemmas(&self, lex: &LemmaLexicon) -> FrequencyTable {
        let mut out = FrequencyTable::new(ItemKind::Lemma, &self.source_id);
        for (w, &c) in &self.counts {
            out.add(lex.lemma_of(w), c);
        }
        out
    }

    pub fn summary(&self) -> TableSummary {
        TableSummary {
            source_id: self.source_id.clone(),
            item_kind: self.item_kind,
            total_tokens: self.total_tokens(),
            unique_count: self.unique_count(),
        }
    }
}

/// Total and unique counts of one table: a row of a corpus overview table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSummary {
    pub source_id: String,
    pub item_kind: ItemKind,
    pub total_tokens: u64,
    pub unique_count: usize,
}

fn count_document(doc: &Document, policy: &FilterPolicy, source_id: &str) -> FrequencyTable {
    let mut table = FrequencyTable::new(ItemKind::Word, source_id);
    for_each_kept_token(&doc.raw_text, policy, |w| table.add(w, 1));
    table
}

/// One word table per document, in document order.
pub fn count_words_per_document(corpus: &CorpusSource, policy: &FilterPolicy) -> Vec<FrequencyTable> {
    corpus.documents.par_iter().map(|d| count_document(d, policy, &corpus.id)).collect()
}

pub fn count_words(corpus: &CorpusSource, policy: &FilterPolicy) -> FrequencyTable {
    corpus
        .documents
        .par_iter()
        .fold(
            || FrequencyTable::new(ItemKind::Word, &corpus.id),
            |mut acc, doc| {
                for_each_kept_token(&doc.raw_text, policy, |w| acc.add(w, 1));
                acc
            },
        )
        .reduce(
            || FrequencyTable::new(ItemKind::Word, &corpus.id),
            |mut a, b| {
                a.merge(b);
                a
            },
        )
}

pub fn count_lemmas(corpus: &CorpusSource, policy: &FilterPolicy, lex: &LemmaLexicon) -> FrequencyTable {
    count_words(corpus, policy).to_lemmas(lex)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedEntry {
    pub rank: usize,
    pub item: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedList {
    pub source_id: String,
    pub entries: Vec<RankedEntry>,
}

impl RankedList {
    /// A list whose order is already known but whose counts are not (for
    /// example a published top-ten row). Counts are synthesized as
    /// `n, n-1, ..., 1` so the ordering invariants hold.
    pub fn from_ordered_items<I, S>(source_id: &str, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let items: Vec<String> = items.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for it in &items {
            if !seen.insert(it.as_str()) {
                return Err(Error::InvalidArgument(format!("{source_id}: duplicate ranked item {it:?}")));
            }
        }
        let n = items.len() as u64;
        let entries = items
            .into_iter()
            .enumerate()
            .map(|(i, item)| RankedEntry { rank: i + 1, item, count: n - i as u64 })
            .collect();
        Ok(RankedList { source_id: source_id.to_owned(), entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn items(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.item.as_str())
    }

    /// `item<TAB>count` lines in rank order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.item);
            out.push('\t');
            out.push_str(&e.count.to_string());
            out.push('\n');
        }
        out
    }
}

pub fn rank_items(table: &FrequencyTable) -> RankedList {
    let mut pairs: Vec<(&str, u64)> = table.counts.iter().map(|(k, &v)| (k.as_str(), v)).collect();
    pairs.sort_unstable_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let entries = pairs
        .into_iter()
        .enumerate()
        .map(|(i, (item, count))| RankedEntry { rank: i + 1, item: item.to_owned(), count })
        .collect();
    RankedList { source_id: table.source_id.clone(), entries }
}

/// The first `min(k, n)` items of a ranked list.
pub fn top_k(ranked: &RankedList, k: usize) -> Result<Vec<&str>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    Ok(ranked.items().take(k).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(pairs: &[(&str, u64)]) -> FrequencyTable {
        FrequencyTable::from_counts(ItemKind::Lemma, "t", pairs.iter().map(|&(k, v)| (k, v)))
    }

    fn triples(r: &RankedList) -> Vec<(usize, &str, u64)> {
        r.entries.iter().map(|e| (e.rank, e.item.as_str(), e.count)).collect()
    }

    #[test]
    fn counts_one_document() {
        let c = CorpusSource::from_texts("T", "x", ["घर घर गया।"]);
        let t = count_words(&c, &FilterPolicy::default());
        assert_eq!(t.get("घर"), 2);
        assert_eq!(t.get("गया"), 1);
        assert_eq!(t.total_tokens(), 3);
        assert_eq!(t.unique_count(), 2);
        assert_eq!(t.item_kind, ItemKind::Word);
    }

    #[test]
    fn everything_filtered() {
        let c = CorpusSource::from_texts("T", "x", ["abc 123"]);
        let t = count_words(&c, &FilterPolicy::default());
        assert!(t.is_empty());
        assert_eq!(t.total_tokens(), 0);
    }

    #[test]
    fn lemma_counts_collapse() {
        let c = CorpusSource::from_texts("T", "x", ["गया जाना"]);
        let lex = LemmaLexicon::from_pairs("t", [("गया", "जा"), ("जाना", "जा")]).unwrap();
        let t = count_lemmas(&c, &FilterPolicy::default(), &lex);
        assert_eq!(t.get("जा"), 2);
        assert_eq!(t.unique_count(), 1);
        assert_eq!(t.item_kind, ItemKind::Lemma);
    }

    #[test]
    fn empty_lexicon_lemma_table_equals_word_table() {
        let c = CorpusSource::from_texts("T", "x", ["वह घर गया। वह आया।"]);
        let p = FilterPolicy::default();
        let words = count_words(&c, &p);
        let lemmas = count_lemmas(&c, &p, &LemmaLexicon::identity());
        assert_eq!(words.counts(), lemmas.counts());
    }

    #[test]
    fn ranking_strict_order() {
        let r = rank_items(&table(&[("है", 3), ("का", 5)]));
        assert_eq!(triples(&r), vec![(1, "का", 5), (2, "है", 3)]);
    }

    #[test]
    fn ranking_tie_rule() {
        let r = rank_items(&table(&[("है", 3), ("जा", 3), ("का", 5)]));
        assert_eq!(triples(&r), vec![(1, "का", 5), (2, "जा", 3), (3, "है", 3)]);
    }

    #[test]
    fn ranking_empty() {
        assert!(rank_items(&table(&[])).is_empty());
    }

    #[test]
    fn top_k_truncates() {
        let r = rank_items(&table(&[("का", 5), ("है", 3)]));
        assert_eq!(top_k(&r, 10).unwrap(), vec!["का", "है"]);
        assert_eq!(top_k(&r, 1).unwrap(), vec!["का"]);
        assert!(top_k(&r, 0).is_err());
    }

    #[test]
    fn top_ten_from_published_row() {
        let row = "का है वह हो में कर था जा यह और";
        let r = RankedList::from_ordered_items("LR12", row.split(' ')).unwrap();
        assert_eq!(top_k(&r, 10).unwrap(), row.split(' ').collect::<Vec<_>>());
        let ranked_again = rank_items(&FrequencyTable::from_counts(
            ItemKind::Lemma,
            "LR12",
            r.entries.iter().map(|e| (e.item.clone(), e.count)),
        ));
        assert_eq!(ranked_again, r);
    }

    #[test]
    fn ordered_items_reject_duplicates() {
        assert!(RankedList::from_ordered_items("x", ["का", "का"]).is_err());
    }

    #[test]
    fn merge_is_keywise_sum() {
        let mut a = table(&[("का", 1), ("है", 2)]);
        a.merge(table(&[("है", 3), ("जा", 1), ("और", 1)]));
        assert_eq!(a.get("है"), 5);
        assert_eq!(a.get("का"), 1);
        assert_eq!(a.unique_count(), 4);
    }

    #[test]
    fn tsv_in_rank_order() {
        let r = rank_items(&table(&[("है", 3), ("का", 5)]));
        assert_eq!(r.to_tsv(), "का\t5\nहै\t3\n");
    }
}
