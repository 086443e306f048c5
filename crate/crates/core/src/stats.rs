//! Consistency and part-of-speech analyses over ranked lists.
//!
//! [`top_k_overlap`] counts, for every item, how many sources place it in
//! their top `k`. [`point_biserial`] correlates a binary membership vector
//! with ranks; [`pos_rank_analysis`] applies it per tag group and per source
//! and summarizes the coefficients across sources.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use statrs::function::beta::beta_reg;

use crate::error::{Error, Result, Undefined};
use crate::freq::{top_k, RankedList};
use crate::textfile::{content_lines, read_utf8};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub k: usize,
    pub source_count: usize,
    /// Number of sources whose top `k` contains the item.
    pub counts: BTreeMap<String, usize>,
    pub unique_items: usize,
    pub max_count: usize,
    /// Sources with fewer than `k` entries. When non-empty the sum of
    /// counts is below `k * source_count`.
    pub short_sources: Vec<String>,
}

impl OverlapReport {
    /// Items by count descending, then codepoint order.
    pub fn ranked(&self) -> Vec<(&str, usize)> {
        let mut v: Vec<_> = self.counts.iter().map(|(k, &c)| (k.as_str(), c)).collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// `item<TAB>count`, highest count first.
    pub fn to_tsv(&self) -> String {
        self.ranked().into_iter().map(|(item, c)| format!("{item}\t{c}\n")).collect()
    }
}

pub fn top_k_overlap(lists: &[RankedList], k: usize) -> Result<OverlapReport> {
    if lists.len() < 2 {
        return Err(Error::InvalidArgument(format!("overlap needs at least 2 lists, got {}", lists.len())));
    }
    let mut counts = BTreeMap::new();
    let mut short_sources = Vec::new();
    for list in lists {
        let top: BTreeSet<&str> = top_k(list, k)?.into_iter().collect();
        if list.len() < k {
            short_sources.push(list.source_id.clone());
        }
        for item in top {
            *counts.entry(item.to_owned()).or_insert(0) += 1;
        }
    }
    Ok(OverlapReport {
        k,
        source_count: lists.len(),
        unique_items: counts.len(),
        max_count: counts.values().copied().max().unwrap_or(0),
        counts,
        short_sources,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointBiserial {
    pub r: f64,
    /// Two-tailed p-value of `t = r * sqrt((n - 2) / (1 - r^2))`, `n - 2` df.
    pub p: f64,
    pub n1: usize,
    pub n0: usize,
}

/// Two-tailed Student t p-value, via `P(|T| > |t|) = I_{df/(df+t²)}(df/2, 1/2)`.
pub fn t_two_tailed_p(t: f64, df: f64) -> f64 {
    if t.is_infinite() {
        return 0.0;
    }
    let x = df / (df + t * t);
    beta_reg(df / 2.0, 0.5, x).clamp(0.0, 1.0)
}

/// Point-biserial correlation of `membership` with `ranks`:
/// `r = (M1 - M0) / s_n * sqrt(n1 * n0 / n^2)` with `s_n` the population
/// standard deviation of all ranks.
pub fn point_biserial(membership: &[bool], ranks: &[f64]) -> Result<PointBiserial> {
    let n = membership.len();
    if n != ranks.len() {
        return Err(Error::UndefinedCorrelation(Undefined::LengthMismatch { membership: n, ranks: ranks.len() }));
    }
    if n < 3 {
        return Err(Error::UndefinedCorrelation(Undefined::TooFewObservations(n)));
    }
    let n1 = membership.iter().filter(|&&m| m).count();
    let n0 = n - n1;
    if n1 == 0 || n0 == 0 {
        return Err(Error::UndefinedCorrelation(Undefined::ConstantMembership));
    }
    if ranks.iter().all(|&r| r == ranks[0]) {
        return Err(Error::UndefinedCorrelation(Undefined::ZeroVariance));
    }

    let nf = n as f64;
    let mean = ranks.iter().sum::<f64>() / nf;
    let var = ranks.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / nf;
    let sd = var.sqrt();
    if sd == 0.0 || !sd.is_finite() {
        return Err(Error::UndefinedCorrelation(Undefined::ZeroVariance));
    }

    let (mut sum1, mut sum0) = (0.0, 0.0);
    for (&m, &r) in membership.iter().zip(ranks) {
        if m {
            sum1 += r - mean;
        } else {
            sum0 += r - mean;
        }
    }
    // group means taken on centred ranks keep cancellation small
    let m1 = sum1 / n1 as f64;
    let m0 = sum0 / n0 as f64;
    let r = ((m1 - m0) / sd * ((n1 as f64 * n0 as f64) / (nf * nf)).sqrt()).clamp(-1.0, 1.0);

    let df = nf - 2.0;
    let denom = 1.0 - r * r;
    let p = if denom <= 0.0 { 0.0 } else { t_two_tailed_p(r * (df / denom).sqrt(), df) };
    Ok(PointBiserial { r, p, n1, n0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Descriptive {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation; absent for a single value.
    pub sd: Option<f64>,
    pub max: f64,
    pub min: f64,
}

pub fn descriptive_stats(values: &[f64]) -> Result<Descriptive> {
    if values.is_empty() {
        return Err(Error::InvalidArgument("descriptive statistics of an empty sample".into()));
    }
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let sd = (n >= 2).then(|| (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt());
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(Descriptive { n, mean, sd, max, min })
}

pub const OTHER_TAG: &str = "other";

/// Item to POS tag. Items missing from the lexicon are tagged [`OTHER_TAG`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PosLexicon {
    tags: HashMap<String, String>,
}

impl PosLexicon {
    pub fn from_pairs<I, S, T>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        PosLexicon { tags: pairs.into_iter().map(|(s, t)| (s.into(), t.into())).collect() }
    }

    pub fn tag(&self, item: &str) -> &str {
        self.tags.get(item).map(String::as_str).unwrap_or(OTHER_TAG)
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }
}

/// `item<TAB>tag` per line.
pub fn load_pos_lexicon(path: &Path) -> Result<PosLexicon> {
    let text = read_utf8(path)?;
    let mut tags = HashMap::new();
    for (n, line) in content_lines(&text) {
        let mut f = line.split('\t');
        let (item, tag) = match (f.next(), f.next(), f.next()) {
            (Some(i), Some(t), None) if !i.trim().is_empty() && !t.trim().is_empty() => (i.trim(), t.trim()),
            _ => return Err(Error::malformed(path, n, "expected `item<TAB>tag`")),
        };
        let item: String = unicode_normalization::UnicodeNormalization::nfc(item).collect();
        if let Some(prev) = tags.insert(item.clone(), tag.to_owned()) {
            if prev != tag {
                return Err(Error::Conflict {
                    path: path.to_path_buf(),
                    line: n,
                    key: item,
                    existing: prev,
                    conflicting: tag.to_owned(),
                });
            }
        }
    }
    Ok(PosLexicon { tags })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagGroup {
    pub name: String,
    pub members: BTreeSet<String>,
}

impl TagGroup {
    pub fn new(name: &str, members: &[&str]) -> Self {
        TagGroup { name: name.to_owned(), members: members.iter().map(|s| s.to_string()).collect() }
    }

    /// Nouns, post-positions/pronouns, symbols, main verbs, quantifiers,
    /// negation and conjunctions.
    pub fn defaults() -> Vec<TagGroup> {
        vec![
            TagGroup::new("NN/NNP/NNPC", &["NN", "NNP", "NNPC"]),
            TagGroup::new("PSP/PRP", &["PSP", "PRP"]),
            TagGroup::new("SYM", &["SYM"]),
            TagGroup::new("VM", &["VM"]),
            TagGroup::new("QC/QF/QO", &["QC", "QF", "QO"]),
            TagGroup::new("NEG", &["NEG"]),
            TagGroup::new("CC", &["CC"]),
        ]
    }

    pub fn contains(&self, tag: &str) -> bool {
        self.members.contains(tag)
    }
}

/// What plays the role of the continuous variable.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankVariable {
    /// 1-based rank, 1 = most frequent.
    #[default]
    Rank,
    /// Raw frequency count.
    Frequency,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CellOutcome {
    Defined { r: f64, p: f64, n1: usize, n0: usize },
    Undefined { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationCell {
    pub group: String,
    pub source: String,
    #[serde(flatten)]
    pub outcome: CellOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub group: String,
    pub r: Option<Descriptive>,
    pub p: Option<Descriptive>,
    /// Sources excluded from the summary because the cell was undefined.
    pub flagged_sources: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    /// Free-form label of the analysed lists, e.g. "Words" or "Lemmas".
    pub list_label: String,
    pub depth: Option<usize>,
    pub rank_variable: RankVariable,
    pub cells: Vec<CorrelationCell>,
    pub groups: Vec<GroupSummary>,
}

impl CorrelationReport {
    pub fn defined_cells(&self) -> usize {
        self.cells.iter().filter(|c| matches!(c.outcome, CellOutcome::Defined { .. })).count()
    }
}

/// Correlates tag-group membership with rank for every (group, source)
/// pair over the top `depth` entries of each list (`None` = whole list).
pub fn pos_rank_analysis(
    list_label: &str,
    lists: &[RankedList],
    lex: &PosLexicon,
    groups: &[TagGroup],
    depth: Option<usize>,
    rank_variable: RankVariable,
) -> CorrelationReport {
    let mut cells = Vec::with_capacity(lists.len() * groups.len());
    let mut summaries = Vec::with_capacity(groups.len());

    for group in groups {
        let mut rs = Vec::new();
        let mut ps = Vec::new();
        let mut flagged = Vec::new();
        for list in lists {
            let take = depth.unwrap_or(usize::MAX);
            let entries = &list.entries[..list.entries.len().min(take)];
            let membership: Vec<bool> = entries.iter().map(|e| group.contains(lex.tag(&e.item))).collect();
            let ranks: Vec<f64> = entries
                .iter()
                .map(|e| match rank_variable {
                    RankVariable::Rank => e.rank as f64,
                    RankVariable::Frequency => e.count as f64,
                })
                .collect();
            let outcome = match point_biserial(&membership, &ranks) {
                Ok(pb) => {
                    rs.push(pb.r);
                    ps.push(pb.p);
                    CellOutcome::Defined { r: pb.r, p: pb.p, n1: pb.n1, n0: pb.n0 }
                }
                Err(e) => {
                    flagged.push(list.source_id.clone());
                    CellOutcome::Undefined { reason: e.to_string() }
                }
            };
            cells.push(CorrelationCell { group: group.name.clone(), source: list.source_id.clone(), outcome });
        }
        summaries.push(GroupSummary {
            group: group.name.clone(),
            r: descriptive_stats(&rs).ok(),
            p: descriptive_stats(&ps).ok(),
            flagged_sources: flagged,
        });
    }

    CorrelationReport { list_label: list_label.to_owned(), depth, rank_variable, cells, groups: summaries }
}

pub const DEFAULT_REJECTION_THRESHOLD: f64 = 0.5;

/// True when no group's mean coefficient exceeds `threshold` in magnitude,
/// i.e. part of speech does not explain rank.
pub fn reject_pos_hypothesis(report: &CorrelationReport, threshold: f64) -> bool {
    report.groups.iter().filter_map(|g| g.r.as_ref()).all(|d| d.mean.abs() <= threshold)
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.4}")).unwrap_or_else(|| "NA".to_owned())
}

pub const TABLE_HEADER: &str = "part_of_speech\tsource_list\tr_mean\tr_sd\tr_max\tr_min\tp_mean\tp_sd\n";

/// Summary rows laid out as part of speech, list label, r mean/sd/max/min,
/// p mean/sd. Pass several reports to interleave them per group.
pub fn correlation_table_tsv(reports: &[&CorrelationReport]) -> String {
    let mut out = String::from(TABLE_HEADER);
    let Some(first) = reports.first() else { return out };
    for (gi, g) in first.groups.iter().enumerate() {
        for rep in reports {
            let Some(s) = rep.groups.get(gi) else { continue };
            debug_assert_eq!(s.group, g.group);
            let r = s.r.as_ref();
            let p = s.p.as_ref();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                s.group,
                rep.list_label,
                fmt_opt(r.map(|d| d.mean)),
                fmt_opt(r.and_then(|d| d.sd)),
                fmt_opt(r.map(|d| d.max)),
                fmt_opt(r.map(|d| d.min)),
                fmt_opt(p.map(|d| d.mean)),
                fmt_opt(p.and_then(|d| d.sd)),
            ));
        }
    }
    out
}
