//! Bundled reference data and loaders for plain lemma lists and ranked-row
//! files.
//!
//! * [`published_stop_lemmas`]: the published 311-entry stop lemma list, most frequent first.
//! * [`published_top_ten_rows`]: the published top-ten lemma rows of eight corpora.

use std::collections::HashSet;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::freq::RankedList;
use crate::textfile::{content_lines, read_utf8};

pub(crate) const STOP_LEMMAS_TEXT: &str = include_str!("../data/table5_stoplemmas.txt");
pub(crate) const TOP_TEN_ROWS_TEXT: &str = include_str!("../data/top_ten_rows.tsv");

/// An ordered lemma list without counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceList {
    pub id: String,
    lemmas: Vec<String>,
    index: HashSet<String>,
}

impl ReferenceList {
    pub fn new<I, S>(id: &str, lemmas: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = ReferenceList { id: id.to_owned(), lemmas: Vec::new(), index: HashSet::new() };
        for l in lemmas {
            let l: String = l.as_ref().trim().nfc().collect();
            if l.is_empty() {
                continue;
            }
            if !out.index.insert(l.clone()) {
                return Err(Error::InvalidArgument(format!("{id}: duplicate lemma {l:?}")));
            }
            out.lemmas.push(l);
        }
        Ok(out)
    }

    pub fn lemmas(&self) -> &[String] {
        &self.lemmas
    }

    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.index.contains(lemma)
    }
}

fn parse_list(id: &str, text: &str) -> Result<ReferenceList> {
    ReferenceList::new(id, content_lines(text).map(|(_, l)| l))
}

/// One lemma per line, `#` comments.
pub fn load_reference_list(path: &Path) -> Result<ReferenceList> {
    let list = parse_list(&path.display().to_string(), &read_utf8(path)?)?;
    if list.is_empty() {
        return Err(Error::EmptyList(path.to_path_buf()));
    }
    Ok(list)
}

pub fn published_stop_lemmas() -> ReferenceList {
    parse_list("published", STOP_LEMMAS_TEXT).expect("bundled list is well-formed")
}

fn parse_rows(origin: &Path, text: &str) -> Result<Vec<RankedList>> {
    let mut out = Vec::new();
    for (n, line) in content_lines(text) {
        let Some((source, items)) = line.split_once('\t') else {
            return Err(Error::malformed(origin, n, "expected `source<TAB>item item ...`"));
        };
        let items: Vec<String> = items.split_whitespace().map(|s| s.nfc().collect()).collect();
        if source.trim().is_empty() || items.is_empty() {
            return Err(Error::malformed(origin, n, "empty source id or item list"));
        }
        out.push(RankedList::from_ordered_items(source.trim(), items)?);
    }
    Ok(out)
}

/// Reads `source<TAB>item item ...` rows, each already in rank order.
pub fn load_ranked_rows(path: &Path) -> Result<Vec<RankedList>> {
    parse_rows(path, &read_utf8(path)?)
}

pub fn published_top_ten_rows() -> Vec<RankedList> {
    parse_rows(Path::new("bundled rows"), TOP_TEN_ROWS_TEXT).expect("bundled rows are well-formed")
}
