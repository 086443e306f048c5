//! Run configuration and the pipeline commands behind the `stoplemma`
//! binary.
//!
//! Every command validates all of its input paths before reading anything,
//! computes its outputs fully in memory and only then writes them, so a
//! failing run leaves no partial files. Outputs never contain clocks: the
//! provenance block records parameters and SHA-256 digests of the inputs.
//!
//! Configuration is TOML. Relative paths resolve against the config file's
//! directory; command-line overrides win over file values.
//!
//! ```toml
//! output_dir = "out"
//! formats = ["tsv", "json"]
//! lexicon = "lexicon.tsv"
//! stopword_lists = ["lists/a.txt", "lists/b.txt"]
//! k_a = 100
//! k_b = "all"
//!
//! [filter]
//! drop_devanagari_digits = true
//!
//! [[corpus]]
//! id = "LR12"
//! path = "corpus_a"
//! domain = "Aesthetics"
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::assess::{assess_coverage, load_mapping, CoverageReport};
use crate::corpus::{load_corpus_with, metadata_summary, CorpusSource, LoadOptions, MetadataSummary};
use crate::error::{Error, Result};
use crate::freq::{count_words, rank_items, FrequencyTable, RankedList};
use crate::induce::{induce, load_stopword_list, StopWordList, DEFAULT_K};
use crate::lemma::{load_lexicon, LemmaLexicon};
use crate::normalize::FilterPolicy;
use crate::reference::{
    load_ranked_rows, load_reference_list, published_stop_lemmas, published_top_ten_rows, ReferenceList,
    STOP_LEMMAS_TEXT, TOP_TEN_ROWS_TEXT,
};
use crate::stats::{
    correlation_table_tsv, load_pos_lexicon, pos_rank_analysis, reject_pos_hypothesis, top_k_overlap,
    CorrelationReport, RankVariable, TagGroup,
};
use crate::textfile::files_under;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Tsv,
    Json,
}

/// A top-k bound: a positive integer or `"all"`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum KSetting {
    Count(usize),
    Word(String),
}

impl KSetting {
    fn resolve(self, what: &str) -> Result<usize> {
        match self {
            KSetting::Count(0) => Err(Error::Config(format!("{what} must be at least 1"))),
            KSetting::Count(k) => Ok(k),
            KSetting::Word(w) if w == "all" => Ok(usize::MAX),
            KSetting::Word(w) => Err(Error::Config(format!("{what}: expected a number or \"all\", got {w:?}"))),
        }
    }
}

/// Parses a k value given on the command line.
pub fn parse_k(s: &str) -> std::result::Result<usize, String> {
    if s == "all" {
        return Ok(usize::MAX);
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer or \"all\", got {s:?}")),
        Ok(k) => Ok(k),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    output_dir: Option<String>,
    formats: Option<Vec<Format>>,
    k_a: Option<KSetting>,
    k_b: Option<KSetting>,
    lexicon: Option<String>,
    #[serde(default)]
    stopword_lists: Vec<String>,
    pos_lexicon: Option<String>,
    mapping: Option<String>,
    stop_lemma_list: Option<String>,
    #[serde(default)]
    filter: FilterPolicy,
    #[serde(default)]
    corpus: Vec<CorpusEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusEntry {
    id: String,
    path: String,
    #[serde(default)]
    domain: String,
    name: Option<String>,
    lexicon: Option<String>,
}

/// A path as written by the user plus where it resolves to. Provenance
/// records the written form so output does not depend on the working
/// directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputPath {
    pub given: String,
    pub resolved: PathBuf,
}

impl InputPath {
    pub fn new(base: &Path, given: &str) -> Self {
        let p = Path::new(given);
        let resolved = if p.is_absolute() { p.to_path_buf() } else { base.join(p) };
        InputPath { given: given.to_owned(), resolved }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub id: String,
    pub name: Option<String>,
    pub domain_label: String,
    pub path: InputPath,
    pub lexicon: Option<InputPath>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub base_dir: PathBuf,
    pub corpora: Vec<CorpusSpec>,
    pub lexicon: Option<InputPath>,
    pub stopword_lists: Vec<InputPath>,
    pub pos_lexicon: Option<InputPath>,
    pub mapping: Option<InputPath>,
    pub stop_lemma_list: Option<InputPath>,
    pub k_a: usize,
    pub k_b: usize,
    pub filter: FilterPolicy,
    pub output_dir: PathBuf,
    pub formats: BTreeSet<Format>,
}

/// Command-line values that replace config file values when present.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub output_dir: Option<PathBuf>,
    pub formats: Option<Vec<Format>>,
    pub k_a: Option<usize>,
    pub k_b: Option<usize>,
    pub lexicon: Option<PathBuf>,
    pub pos_lexicon: Option<PathBuf>,
    pub mapping: Option<PathBuf>,
    pub stop_lemma_list: Option<PathBuf>,
    pub drop_symbols: Option<bool>,
    pub drop_latin_words: Option<bool>,
    pub drop_latin_numbers: Option<bool>,
    pub drop_devanagari_digits: Option<bool>,
    pub drop_other_scripts: Option<bool>,
}

impl RunConfig {
    /// A config with no inputs, resolving relative paths against `base_dir`.
    pub fn empty(base_dir: &Path) -> Self {
        RunConfig {
            base_dir: base_dir.to_path_buf(),
            corpora: Vec::new(),
            lexicon: None,
            stopword_lists: Vec::new(),
            pos_lexicon: None,
            mapping: None,
            stop_lemma_list: None,
            k_a: DEFAULT_K,
            k_b: DEFAULT_K,
            filter: FilterPolicy::default(),
            output_dir: base_dir.join("out"),
            formats: BTreeSet::from([Format::Tsv, Format::Json]),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::parse(&text, &base)
    }

    pub fn parse(text: &str, base_dir: &Path) -> Result<Self> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let mut cfg = RunConfig::empty(base_dir);
        let path = |s: &str| InputPath::new(base_dir, s);

        let mut ids = BTreeSet::new();
        for c in file.corpus {
            if c.id.is_empty() {
                return Err(Error::Config("corpus id must not be empty".into()));
            }
            if !ids.insert(c.id.clone()) {
                return Err(Error::Config(format!("duplicate corpus id {:?}", c.id)));
            }
            cfg.corpora.push(CorpusSpec {
                path: path(&c.path),
                lexicon: c.lexicon.as_deref().map(path),
                id: c.id,
                name: c.name,
                domain_label: c.domain,
            });
        }
        cfg.lexicon = file.lexicon.as_deref().map(path);
        cfg.stopword_lists = file.stopword_lists.iter().map(|s| path(s)).collect();
        cfg.pos_lexicon = file.pos_lexicon.as_deref().map(path);
        cfg.mapping = file.mapping.as_deref().map(path);
        cfg.stop_lemma_list = file.stop_lemma_list.as_deref().map(path);
        if let Some(k) = file.k_a {
            cfg.k_a = k.resolve("k_a")?;
        }
        if let Some(k) = file.k_b {
            cfg.k_b = k.resolve("k_b")?;
        }
        cfg.filter = file.filter;
        if let Some(dir) = file.output_dir {
            cfg.output_dir = path(&dir).resolved;
        }
        if let Some(formats) = file.formats {
            cfg.formats = formats.into_iter().collect();
        }
        Ok(cfg)
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        let given = |p: &PathBuf| InputPath { given: p.display().to_string(), resolved: p.clone() };
        if let Some(d) = &o.output_dir {
            self.output_dir = d.clone();
        }
        if let Some(f) = &o.formats {
            self.formats = f.iter().copied().collect();
        }
        for (value, slot, what) in [(o.k_a, &mut self.k_a, "k_a"), (o.k_b, &mut self.k_b, "k_b")] {
            if let Some(k) = value {
                if k == 0 {
                    return Err(Error::Config(format!("{what} must be at least 1")));
                }
                *slot = k;
            }
        }
        if let Some(p) = &o.lexicon {
            self.lexicon = Some(given(p));
        }
        if let Some(p) = &o.pos_lexicon {
            self.pos_lexicon = Some(given(p));
        }
        if let Some(p) = &o.mapping {
            self.mapping = Some(given(p));
        }
        if let Some(p) = &o.stop_lemma_list {
            self.stop_lemma_list = Some(given(p));
        }
        let f = &mut self.filter;
        for (value, slot) in [
            (o.drop_symbols, &mut f.drop_symbols),
            (o.drop_latin_words, &mut f.drop_latin_words),
            (o.drop_latin_numbers, &mut f.drop_latin_numbers),
            (o.drop_devanagari_digits, &mut f.drop_devanagari_digits),
            (o.drop_other_scripts, &mut f.drop_other_scripts),
        ] {
            if let Some(v) = value {
                *slot = v;
            }
        }
        Ok(())
    }

    fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }

    fn corpus_lexicon<'a>(&'a self, spec: &'a CorpusSpec) -> Option<&'a InputPath> {
        spec.lexicon.as_ref().or(self.lexicon.as_ref())
    }
}

fn require_file(p: &InputPath, role: &str) -> Result<()> {
    if p.resolved.is_file() {
        Ok(())
    } else {
        Err(Error::Config(format!("{role} {} does not exist or is not a file", p.given)))
    }
}

fn require_dir(p: &InputPath, role: &str) -> Result<()> {
    if p.resolved.is_dir() {
        Ok(())
    } else {
        Err(Error::Config(format!("{role} {} does not exist or is not a directory", p.given)))
    }
}

fn require_corpora(cfg: &RunConfig) -> Result<()> {
    if cfg.corpora.is_empty() {
        return Err(Error::Config("no [[corpus]] entries configured".into()));
    }
    for c in &cfg.corpora {
        require_dir(&c.path, &format!("corpus {}", c.id))?;
        if let Some(l) = cfg.corpus_lexicon(c) {
            require_file(l, &format!("lexicon for corpus {}", c.id))?;
        }
    }
    Ok(())
}

fn require_lists(cfg: &RunConfig) -> Result<()> {
    if cfg.stopword_lists.is_empty() {
        return Err(Error::Config("no stopword_lists configured".into()));
    }
    for p in &cfg.stopword_lists {
        require_file(p, "stop word list")?;
    }
    Ok(())
}

/// Files produced by a command, keyed by path relative to the output
/// directory.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Artifacts {
    pub files: BTreeMap<PathBuf, Vec<u8>>,
    /// Human-readable notes for stderr; not written to disk.
    pub notes: Vec<String>,
}

impl Artifacts {
    fn add(&mut self, rel: impl Into<PathBuf>, content: impl Into<Vec<u8>>) {
        self.files.insert(rel.into(), content.into());
    }

    fn add_json(&mut self, rel: impl Into<PathBuf>, value: &Value) {
        let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
        text.push('\n');
        self.add(rel, text);
    }

    pub fn get(&self, rel: &str) -> Option<&[u8]> {
        self.files.get(Path::new(rel)).map(Vec::as_slice)
    }

    pub fn write_to(&self, out_dir: &Path) -> Result<()> {
        for (rel, bytes) in &self.files {
            let path = out_dir.join(rel);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
            }
            fs::write(&path, bytes).map_err(|e| Error::io(&path, e))?;
        }
        Ok(())
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn hash_file(path: &Path) -> Result<String> {
    Ok(sha256_hex(&fs::read(path).map_err(|e| Error::io(path, e))?))
}

/// Digest over the sorted relative paths and contents of every file below
/// `dir`.
fn hash_dir(dir: &Path) -> Result<String> {
    let mut h = Sha256::new();
    for (rel, path) in files_under(dir)? {
        h.update(rel.as_bytes());
        h.update(b"\0");
        h.update(hash_file(&path)?.as_bytes());
        h.update(b"\n");
    }
    Ok(hex::encode(h.finalize()))
}

#[derive(Default)]
struct Provenance {
    inputs: Vec<Value>,
}

impl Provenance {
    fn file(&mut self, role: &str, p: &InputPath) -> Result<()> {
        self.inputs.push(json!({ "role": role, "path": p.given, "sha256": hash_file(&p.resolved)? }));
        Ok(())
    }

    fn dir(&mut self, role: &str, p: &InputPath) -> Result<()> {
        self.inputs.push(json!({ "role": role, "path": p.given, "sha256": hash_dir(&p.resolved)? }));
        Ok(())
    }

    fn bundled(&mut self, role: &str, name: &str, content: &str) {
        self.inputs.push(json!({ "role": role, "path": name, "sha256": sha256_hex(content.as_bytes()) }));
    }

    fn finish(self, command: &str, parameters: Value) -> Value {
        json!({ "command": command, "parameters": parameters, "inputs": self.inputs })
    }
}

fn k_json(k: usize) -> Value {
    if k == usize::MAX {
        json!("all")
    } else {
        json!(k)
    }
}

fn filter_json(f: &FilterPolicy) -> Value {
    serde_json::to_value(f).expect("policy serializes")
}

struct LoadedCorpus {
    source: CorpusSource,
    words: FrequencyTable,
    lemmas: FrequencyTable,
    lexicon: LemmaLexicon,
}

fn load_lexicon_opt(p: Option<&InputPath>) -> Result<LemmaLexicon> {
    match p {
        Some(p) => {
            let mut lex = load_lexicon(&p.resolved)?;
            lex.set_id(&p.given);
            Ok(lex)
        }
        None => Ok(LemmaLexicon::identity()),
    }
}

fn load_corpora(cfg: &RunConfig, prov: &mut Provenance) -> Result<Vec<LoadedCorpus>> {
    let mut out = Vec::with_capacity(cfg.corpora.len());
    for spec in &cfg.corpora {
        prov.dir(&format!("corpus:{}", spec.id), &spec.path)?;
        let lex_path = cfg.corpus_lexicon(spec);
        if let Some(p) = lex_path {
            prov.file(&format!("lexicon:{}", spec.id), p)?;
        }
        let lexicon = load_lexicon_opt(lex_path)?;
        let opts = LoadOptions { name: spec.name.clone(), ..LoadOptions::default() };
        let source = load_corpus_with(&spec.path.resolved, &spec.id, &spec.domain_label, &opts)?;
        let words = count_words(&source, &cfg.filter);
        let lemmas = words.to_lemmas(&lexicon);
        out.push(LoadedCorpus { source, words, lemmas, lexicon });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
struct CorpusRow<'a> {
    source: &'a str,
    name: &'a str,
    domain: &'a str,
    documents: usize,
    total_words: u64,
    unique_words: usize,
    total_lemmas: u64,
    unique_lemmas: usize,
    metadata: MetadataSummary,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FreqOptions {
    /// Report out-of-lexicon rates as notes.
    pub warn_oov: bool,
}

/// Word and lemma frequency tables per corpus plus an overview row per
/// corpus (document count, total/unique words and lemmas, metadata).
pub fn cmd_freq(cfg: &RunConfig, opts: FreqOptions) -> Result<Artifacts> {
    require_corpora(cfg)?;
    let mut prov = Provenance::default();
    let corpora = load_corpora(cfg, &mut prov)?;

    let mut art = Artifacts::default();
    let mut rows = Vec::new();
    let mut tsv = String::from("source\tdomain\tdocuments\ttotal_words\tunique_words\ttotal_lemmas\tunique_lemmas\n");
    for c in &corpora {
        if cfg.wants(Format::Tsv) {
            art.add(format!("freq/{}.words.tsv", c.source.id), rank_items(&c.words).to_tsv());
            art.add(format!("freq/{}.lemmas.tsv", c.source.id), rank_items(&c.lemmas).to_tsv());
        }
        let row = CorpusRow {
            source: &c.source.id,
            name: &c.source.name,
            domain: &c.source.domain_label,
            documents: c.source.documents.len(),
            total_words: c.words.total_tokens(),
            unique_words: c.words.unique_count(),
            total_lemmas: c.lemmas.total_tokens(),
            unique_lemmas: c.lemmas.unique_count(),
            metadata: metadata_summary(&c.source),
        };
        tsv.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            row.source,
            row.domain,
            row.documents,
            row.total_words,
            row.unique_words,
            row.total_lemmas,
            row.unique_lemmas
        ));
        rows.push(row);
        if opts.warn_oov {
            let oov = c.lexicon.oov_rate(&c.words);
            art.notes.push(format!(
                "{}: {} of {} word types ({:.2}%) and {:.2}% of tokens are not in lexicon {}",
                c.source.id,
                oov.oov_types,
                oov.total_types,
                100.0 * oov.type_rate(),
                100.0 * oov.token_rate(),
                c.lexicon.id()
            ));
        }
    }
    if cfg.wants(Format::Tsv) {
        art.add("freq/corpora.tsv", tsv);
    }
    if cfg.wants(Format::Json) {
        let provenance = prov.finish("freq", json!({ "filter": filter_json(&cfg.filter) }));
        art.add_json("freq/corpora.json", &json!({ "corpora": rows, "provenance": provenance }));
    }
    Ok(art)
}

fn load_lists(cfg: &RunConfig, prov: &mut Provenance) -> Result<Vec<StopWordList>> {
    cfg.stopword_lists
        .iter()
        .map(|p| {
            prov.file("stopword_list", p)?;
            let id =
                p.resolved.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| p.given.clone());
            load_stopword_list(&p.resolved, &id)
        })
        .collect()
}

/// Set A from the stop word lists, Set B from the corpora, and their
/// intersection as the final list.
pub fn cmd_induce(cfg: &RunConfig) -> Result<Artifacts> {
    require_lists(cfg)?;
    require_corpora(cfg)?;
    if let Some(l) = &cfg.lexicon {
        require_file(l, "lexicon")?;
    }

    let mut prov = Provenance::default();
    let lists = load_lists(cfg, &mut prov)?;
    if let Some(l) = &cfg.lexicon {
        prov.file("lexicon", l)?;
    }
    let lex = load_lexicon_opt(cfg.lexicon.as_ref())?;
    let corpora = load_corpora(cfg, &mut prov)?;
    let tables: Vec<FrequencyTable> = corpora.into_iter().map(|c| c.lemmas).collect();

    let result = induce(&lists, &tables, &lex, cfg.k_a, cfg.k_b)?;

    let mut art = Artifacts::default();
    art.add("induce/stoplemmas.txt", result.list.to_text());
    if cfg.wants(Format::Tsv) {
        let tsv: String = result.list.lemmas.iter().map(|l| format!("{}\t{}\n", l.lemma, l.aggregate_count)).collect();
        art.add("induce/stoplemmas.tsv", tsv);
        art.add("induce/set_a.txt", result.set_a.iter().map(|s| format!("{s}\n")).collect::<String>());
        art.add("induce/set_b.txt", result.set_b.iter().map(|s| format!("{s}\n")).collect::<String>());
    }
    if cfg.wants(Format::Json) {
        let lists_json: Vec<Value> = lists
            .iter()
            .map(|l| json!({ "source_id": l.source_id, "raw_count": l.raw_count, "duplicates_removed": l.duplicates_removed }))
            .collect();
        let provenance = prov.finish(
            "induce",
            json!({
                "k_a": k_json(cfg.k_a),
                "k_b": k_json(cfg.k_b),
                "filter": filter_json(&cfg.filter),
                "lexicon_id": result.list.provenance.lexicon_id,
                "list_ids": result.list.provenance.list_ids,
                "corpus_ids": result.list.provenance.corpus_ids,
            }),
        );
        art.add_json(
            "induce/induction_report.json",
            &json!({ "report": result.report, "lists": lists_json, "stop_lemmas": result.list.lemmas, "provenance": provenance }),
        );
    }
    Ok(art)
}

/// Where [`cmd_overlap`] takes its ranked lists from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverlapSource {
    /// Lemma rankings of the configured corpora.
    Lemmas,
    /// Word rankings of the configured corpora.
    Words,
    /// The configured stop word lists in published order.
    StopLists,
    /// A `source<TAB>item item ...` file; `None` means the bundled top-ten rows.
    Rows(Option<PathBuf>),
}

pub fn cmd_overlap(cfg: &RunConfig, k: usize, source: &OverlapSource) -> Result<Artifacts> {
    if k == 0 {
        return Err(Error::Config("k must be at least 1".into()));
    }
    let mut prov = Provenance::default();
    let (label, lists): (&str, Vec<RankedList>) = match source {
        OverlapSource::Lemmas | OverlapSource::Words => {
            require_corpora(cfg)?;
            let corpora = load_corpora(cfg, &mut prov)?;
            let lemmas = *source == OverlapSource::Lemmas;
            let lists = corpora.iter().map(|c| rank_items(if lemmas { &c.lemmas } else { &c.words })).collect();
            (if lemmas { "lemmas" } else { "words" }, lists)
        }
        OverlapSource::StopLists => {
            require_lists(cfg)?;
            let lists = load_lists(cfg, &mut prov)?
                .into_iter()
                .map(|l| RankedList::from_ordered_items(&l.source_id, l.entries))
                .collect::<Result<_>>()?;
            ("stopword_lists", lists)
        }
        OverlapSource::Rows(Some(path)) => {
            let p = InputPath { given: path.display().to_string(), resolved: path.clone() };
            require_file(&p, "ranked rows file")?;
            prov.file("ranked_rows", &p)?;
            ("rows", load_ranked_rows(path)?)
        }
        OverlapSource::Rows(None) => {
            prov.bundled("ranked_rows", "bundled:top_ten_rows", TOP_TEN_ROWS_TEXT);
            ("rows", published_top_ten_rows())
        }
    };

    let report = top_k_overlap(&lists, k)?;
    let mut art = Artifacts::default();
    if cfg.wants(Format::Tsv) {
        art.add("overlap/overlap.tsv", report.to_tsv());
    }
    if cfg.wants(Format::Json) {
        let provenance = prov.finish("overlap", json!({ "k": k, "source": label, "filter": filter_json(&cfg.filter) }));
        art.add_json("overlap/overlap.json", &json!({ "report": report, "provenance": provenance }));
    }
    art.notes.push(format!(
        "{} sources, k = {}: {} unique items, max count {}",
        report.source_count, k, report.unique_items, report.max_count
    ));
    Ok(art)
}

#[derive(Debug, Clone, Copy)]
pub struct PosOptions {
    pub depth: Option<usize>,
    pub rank_variable: RankVariable,
    pub threshold: f64,
}

impl Default for PosOptions {
    fn default() -> Self {
        PosOptions {
            depth: None,
            rank_variable: RankVariable::Rank,
            threshold: crate::stats::DEFAULT_REJECTION_THRESHOLD,
        }
    }
}

/// Point-biserial correlation of tag-group membership with rank, for word
/// and lemma rankings of every corpus.
pub fn cmd_posstats(cfg: &RunConfig, opts: PosOptions) -> Result<Artifacts> {
    let pos_path = cfg.pos_lexicon.as_ref().ok_or_else(|| Error::Config("pos_lexicon is not configured".into()))?;
    require_file(pos_path, "POS lexicon")?;
    require_corpora(cfg)?;
    if opts.depth == Some(0) {
        return Err(Error::Config("depth must be at least 1".into()));
    }

    let mut prov = Provenance::default();
    prov.file("pos_lexicon", pos_path)?;
    let pos = load_pos_lexicon(&pos_path.resolved)?;
    let corpora = load_corpora(cfg, &mut prov)?;
    let word_lists: Vec<RankedList> = corpora.iter().map(|c| rank_items(&c.words)).collect();
    let lemma_lists: Vec<RankedList> = corpora.iter().map(|c| rank_items(&c.lemmas)).collect();

    let groups = TagGroup::defaults();
    let words = pos_rank_analysis("Words", &word_lists, &pos, &groups, opts.depth, opts.rank_variable);
    let lemmas = pos_rank_analysis("Lemmas", &lemma_lists, &pos, &groups, opts.depth, opts.rank_variable);
    if words.defined_cells() == 0 && lemmas.defined_cells() == 0 {
        return Err(Error::Computation("correlation is undefined for every tag group and source".into()));
    }

    let mut art = Artifacts::default();
    if cfg.wants(Format::Tsv) {
        art.add("posstats/pos_rank.tsv", correlation_table_tsv(&[&words, &lemmas]));
    }
    let verdict = |r: &CorrelationReport| reject_pos_hypothesis(r, opts.threshold);
    if cfg.wants(Format::Json) {
        let provenance = prov.finish(
            "posstats",
            json!({
                "depth": opts.depth.map(|d| json!(d)).unwrap_or(json!("full")),
                "rank_variable": opts.rank_variable,
                "threshold": opts.threshold,
                "filter": filter_json(&cfg.filter),
            }),
        );
        art.add_json(
            "posstats/correlation.json",
            &json!({
                "words": words,
                "lemmas": lemmas,
                "no_pos_rank_relationship": { "words": verdict(&words), "lemmas": verdict(&lemmas) },
                "provenance": provenance,
            }),
        );
    }
    art.notes.push(format!(
        "no group exceeds |mean r| > {}: words {}, lemmas {}",
        opts.threshold,
        verdict(&words),
        verdict(&lemmas)
    ));
    Ok(art)
}

/// Coverage of the stop lemma list (configured, or the bundled reference)
/// by a translated external stop word list.
pub fn cmd_assess(cfg: &RunConfig) -> Result<Artifacts> {
    let mapping_path = cfg.mapping.as_ref().ok_or_else(|| Error::Config("mapping is not configured".into()))?;
    require_file(mapping_path, "mapping")?;
    if let Some(l) = &cfg.lexicon {
        require_file(l, "lexicon")?;
    }
    if let Some(l) = &cfg.stop_lemma_list {
        require_file(l, "stop lemma list")?;
    }

    let mut prov = Provenance::default();
    prov.file("mapping", mapping_path)?;
    let mapping = load_mapping(&mapping_path.resolved)?;
    if let Some(l) = &cfg.lexicon {
        prov.file("lexicon", l)?;
    }
    let lex = load_lexicon_opt(cfg.lexicon.as_ref())?;
    let list: ReferenceList = match &cfg.stop_lemma_list {
        Some(p) => {
            prov.file("stop_lemma_list", p)?;
            load_reference_list(&p.resolved)?
        }
        None => {
            prov.bundled("stop_lemma_list", "bundled:stop_lemmas", STOP_LEMMAS_TEXT);
            published_stop_lemmas()
        }
    };

    let report: CoverageReport = assess_coverage(&mapping, &lex, &list);
    let mut art = Artifacts::default();
    art.add("assess/coverage.txt", report.summary());
    if cfg.wants(Format::Json) {
        let provenance = prov.finish("assess", json!({ "lexicon_id": lex.id() }));
        art.add_json("assess/coverage.json", &json!({ "report": report, "provenance": provenance }));
    }
    art.notes.push(report.summary().lines().nth(5).unwrap_or_default().to_owned());
    Ok(art)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_values() {
        assert_eq!(parse_k("10"), Ok(10));
        assert_eq!(parse_k("all"), Ok(usize::MAX));
        assert!(parse_k("0").is_err());
        assert!(parse_k("x").is_err());
    }

    #[test]
    fn parses_config_and_resolves_paths() {
        let cfg = RunConfig::parse(
            r#"
            lexicon = "lex.tsv"
            stopword_lists = ["a.txt"]
            k_b = "all"
            formats = ["json"]
            [filter]
            drop_devanagari_digits = true
            [[corpus]]
            id = "C1"
            path = "c1"
            domain = "Test"
            "#,
            Path::new("/base"),
        )
        .unwrap();
        assert_eq!(cfg.corpora[0].path.resolved, Path::new("/base/c1"));
        assert_eq!(cfg.corpora[0].path.given, "c1");
        assert_eq!(cfg.k_a, DEFAULT_K);
        assert_eq!(cfg.k_b, usize::MAX);
        assert!(cfg.filter.drop_devanagari_digits);
        assert!(cfg.filter.drop_symbols);
        assert_eq!(cfg.formats, BTreeSet::from([Format::Json]));
    }

    #[test]
    fn config_rejects_bad_values() {
        assert!(RunConfig::parse("k_a = 0", Path::new(".")).is_err());
        assert!(RunConfig::parse("k_a = \"many\"", Path::new(".")).is_err());
        assert!(RunConfig::parse("unknown = 1", Path::new(".")).is_err());
        let dup = "[[corpus]]\nid = \"A\"\npath = \"x\"\n[[corpus]]\nid = \"A\"\npath = \"y\"\n";
        assert!(RunConfig::parse(dup, Path::new(".")).is_err());
    }

    #[test]
    fn flags_win() {
        let mut cfg = RunConfig::parse("k_a = 5\n[filter]\ndrop_symbols = true", Path::new(".")).unwrap();
        cfg.apply(&Overrides { k_a: Some(7), drop_symbols: Some(false), ..Overrides::default() }).unwrap();
        assert_eq!(cfg.k_a, 7);
        assert!(!cfg.filter.drop_symbols);
    }

    #[test]
    fn missing_corpus_fails_before_work() {
        let cfg = RunConfig::parse("[[corpus]]\nid = \"A\"\npath = \"/nonexistent/dir\"", Path::new(".")).unwrap();
        assert!(matches!(cmd_freq(&cfg, FreqOptions::default()), Err(Error::Config(_))));
    }

    #[test]
    fn bundled_rows_overlap() {
        let cfg = RunConfig::empty(Path::new("."));
        let art = cmd_overlap(&cfg, 10, &OverlapSource::Rows(None)).unwrap();
        let tsv = std::str::from_utf8(art.get("overlap/overlap.tsv").unwrap()).unwrap();
        assert_eq!(tsv.lines().count(), 18);
        assert!(tsv.starts_with("कर\t8\n"));
    }
}
