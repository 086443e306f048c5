//! Loading corpora from disk and summarizing their document metadata.
//!
//! A corpus is a directory of `.txt` files. An optional `metadata.tsv` in the
//! corpus root describes the documents:
//!
//! ```text
//! file	title	author	gender	state	year
//! a.txt	गोदान	प्रेमचंद	male	Uttar Pradesh	1936
//! ```
//!
//! Empty cells mean unknown. Files without a row simply carry no metadata.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::textfile::{decode_utf8, files_under, read_utf8};

pub const METADATA_FILE: &str = "metadata.tsv";
const METADATA_COLUMNS: [&str; 6] = ["file", "title", "author", "gender", "state", "year"];

/// Independence year; works published before it are pre-independence.
pub const ERA_BOUNDARY_YEAR: i32 = 1947;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gender {
    Male,
    Female,
    Unknown,
}

impl Gender {
    fn parse(cell: &str) -> Option<Gender> {
        match cell.trim().to_ascii_lowercase().as_str() {
            "" | "unknown" | "u" => Some(Gender::Unknown),
            "male" | "m" => Some(Gender::Male),
            "female" | "f" => Some(Gender::Female),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Era {
    PreIndependence,
    PostIndependence,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentMeta {
    pub title: Option<String>,
    pub author: Option<String>,
    pub gender: Gender,
    pub native_state: Option<String>,
    pub year: Option<i32>,
}

impl DocumentMeta {
    pub fn era(&self) -> Era {
        match self.year {
            Some(y) if y < ERA_BOUNDARY_YEAR => Era::PreIndependence,
            Some(_) => Era::PostIndependence,
            None => Era::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    /// Path relative to the corpus root, `/`-separated.
    pub path: String,
    pub raw_text: String,
    pub meta: Option<DocumentMeta>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSource {
    pub id: String,
    pub name: String,
    pub domain_label: String,
    pub documents: Vec<Document>,
}

impl CorpusSource {
    /// Builds an in-memory corpus, mostly useful for tests and fixtures.
    pub fn from_texts<I, S>(id: &str, domain_label: &str, texts: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let documents = texts
            .into_iter()
            .enumerate()
            .map(|(i, t)| Document { path: format!("doc{i:05}.txt"), raw_text: t.into(), meta: None })
            .collect();
        CorpusSource { id: id.to_owned(), name: id.to_owned(), domain_label: domain_label.to_owned(), documents }
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct LoadOptions {
    /// Extension of document files, without the dot.
    pub extension: String,
    pub name: Option<String>,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { extension: "txt".to_owned(), name: None }
    }
}

pub fn load_corpus(root: &Path, id: &str, domain_label: &str) -> Result<CorpusSource> {
    load_corpus_with(root, id, domain_label, &LoadOptions::default())
}

/// Loads every document under `root` in lexicographic path order.
pub fn load_corpus_with(root: &Path, id: &str, domain_label: &str, opts: &LoadOptions) -> Result<CorpusSource> {
    if id.is_empty() {
        return Err(Error::InvalidArgument("corpus id must not be empty".into()));
    }
    if !root.is_dir() {
        return Err(Error::MissingDirectory(root.to_path_buf()));
    }

    let files: Vec<(String, PathBuf)> = files_under(root)?
        .into_iter()
        .filter(|(_, full)| full.extension().is_some_and(|e| e == opts.extension.as_str()))
        .collect();
    if files.is_empty() {
        return Err(Error::EmptyCorpus { path: root.to_path_buf(), extension: opts.extension.clone() });
    }

    let meta_path = root.join(METADATA_FILE);
    let mut metadata = if meta_path.is_file() { load_metadata(&meta_path)? } else { HashMap::new() };

    let texts: Vec<String> = files
        .par_iter()
        .map(|(_, full)| {
            let bytes = fs::read(full).map_err(|e| Error::io(full, e))?;
            decode_utf8(full, bytes)
        })
        .collect::<Result<_>>()?;

    let documents = files
        .into_iter()
        .zip(texts)
        .map(|((rel, _), raw_text)| {
            let meta = metadata.remove(&rel);
            Document { path: rel, raw_text, meta }
        })
        .collect();

    Ok(CorpusSource {
        id: id.to_owned(),
        name: opts.name.clone().unwrap_or_else(|| id.to_owned()),
        domain_label: domain_label.to_owned(),
        documents,
    })
}

fn non_empty(cell: &str) -> Option<String> {
    let cell = cell.trim();
    (!cell.is_empty()).then(|| cell.to_owned())
}

/// Parses a `metadata.tsv` sidecar into `file -> meta`.
pub fn load_metadata(path: &Path) -> Result<HashMap<String, DocumentMeta>> {
    let text = read_utf8(path)?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));

    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => continue,
            Some((n, l)) => break (n, l),
            None => return Err(Error::malformed(path, 1, "missing header row")),
        }
    };
    let columns: Vec<String> = header.1.split('\t').map(|c| c.trim().to_ascii_lowercase()).collect();
    if columns != METADATA_COLUMNS {
        return Err(Error::malformed(
            path,
            header.0,
            format!("expected header {:?}, found {:?}", METADATA_COLUMNS.join("\t"), header.1),
        ));
    }

    let mut out = HashMap::new();
    for (n, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split('\t').collect();
        if cells.len() != METADATA_COLUMNS.len() {
            return Err(Error::malformed(path, n, format!("expected 6 columns, found {}", cells.len())));
        }
        let file = cells[0].trim();
        if file.is_empty() {
            return Err(Error::malformed(path, n, "empty file column"));
        }
        let gender = Gender::parse(cells[3])
            .ok_or_else(|| Error::malformed(path, n, format!("unrecognized gender {:?}", cells[3])))?;
        let year = match cells[5].trim() {
            "" => None,
            y => Some(y.parse::<i32>().map_err(|_| Error::malformed(path, n, format!("bad year {y:?}")))?),
        };
        let meta = DocumentMeta {
            title: non_empty(cells[1]),
            author: non_empty(cells[2]),
            gender,
            native_state: non_empty(cells[4]),
            year,
        };
        if out.insert(file.to_owned(), meta).is_some() {
            return Err(Error::malformed(path, n, format!("duplicate row for {file}")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetadataSummary {
    pub total_docs: usize,
    pub gender_counts: BTreeMap<Gender, usize>,
    /// Exact ratio; round only when presenting.
    pub female_fraction: f64,
    pub state_counts: BTreeMap<String, usize>,
    pub era_counts: BTreeMap<Era, usize>,
}

pub const UNKNOWN_STATE: &str = "unknown";

pub fn metadata_summary(corpus: &CorpusSource) -> MetadataSummary {
    let mut gender_counts = BTreeMap::new();
    let mut state_counts = BTreeMap::new();
    let mut era_counts = BTreeMap::new();

    for doc in &corpus.documents {
        let (gender, state, era) = match &doc.meta {
            Some(m) => (m.gender, m.native_state.as_deref().unwrap_or(UNKNOWN_STATE), m.era()),
            None => (Gender::Unknown, UNKNOWN_STATE, Era::Unknown),
        };
        *gender_counts.entry(gender).or_insert(0) += 1;
        *state_counts.entry(state.to_owned()).or_insert(0) += 1;
        *era_counts.entry(era).or_insert(0) += 1;
    }

    let total_docs = corpus.documents.len();
    let female = gender_counts.get(&Gender::Female).copied().unwrap_or(0);
    let female_fraction = if total_docs == 0 { 0.0 } else { female as f64 / total_docs as f64 };

    MetadataSummary { total_docs, gender_counts, female_fraction, state_counts, era_counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta(gender: Gender, year: Option<i32>) -> DocumentMeta {
        DocumentMeta { title: None, author: None, gender, native_state: None, year }
    }

    fn corpus_with(metas: Vec<Option<DocumentMeta>>) -> CorpusSource {
        let mut c = CorpusSource::from_texts("T", "test", metas.iter().map(|_| "घर"));
        for (d, m) in c.documents.iter_mut().zip(metas) {
            d.meta = m;
        }
        c
    }

    #[test]
    fn era_boundary() {
        assert_eq!(meta(Gender::Male, Some(1946)).era(), Era::PreIndependence);
        assert_eq!(meta(Gender::Male, Some(1947)).era(), Era::PostIndependence);
        assert_eq!(meta(Gender::Male, None).era(), Era::Unknown);
    }

    #[test]
    fn all_unknown_summary() {
        let s = metadata_summary(&corpus_with(vec![None; 5]));
        assert_eq!(s.gender_counts, BTreeMap::from([(Gender::Unknown, 5)]));
        assert_eq!(s.female_fraction, 0.0);
        assert_eq!(s.state_counts.get(UNKNOWN_STATE), Some(&5));
    }

    #[test]
    fn female_fraction_quarter() {
        let metas = [Gender::Female, Gender::Male, Gender::Male, Gender::Male]
            .into_iter()
            .map(|g| Some(meta(g, Some(1990))))
            .collect();
        let s = metadata_summary(&corpus_with(metas));
        assert_eq!(s.female_fraction, 0.25);
        assert_eq!(s.era_counts, BTreeMap::from([(Era::PostIndependence, 4)]));
    }

    #[test]
    fn empty_corpus_summary() {
        let s = metadata_summary(&corpus_with(Vec::new()));
        assert_eq!(s.total_docs, 0);
        assert_eq!(s.female_fraction, 0.0);
    }

    #[test]
    fn gender_spellings() {
        assert_eq!(Gender::parse("F"), Some(Gender::Female));
        assert_eq!(Gender::parse(" male "), Some(Gender::Male));
        assert_eq!(Gender::parse(""), Some(Gender::Unknown));
        assert_eq!(Gender::parse("x"), None);
    }
}
