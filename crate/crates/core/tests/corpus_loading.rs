use std::fs;
use std::path::Path;

use stoplemma::corpus::{load_corpus, load_corpus_with, metadata_summary, Era, Gender, LoadOptions};
use stoplemma::Error;

fn write(root: &Path, rel: &str, content: impl AsRef<[u8]>) {
    let p = root.join(rel);
    fs::create_dir_all(p.parent().unwrap()).unwrap();
    fs::write(p, content).unwrap();
}

const HEADER: &str = "file\ttitle\tauthor\tgender\tstate\tyear\n";

#[test]
fn documents_sorted_by_relative_path_across_subdirectories() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "b/2.txt", "दो");
    write(dir.path(), "a.txt", "एक");
    write(dir.path(), "b/1.txt", "तीन");
    write(dir.path(), "notes.md", "ignored");
    let c = load_corpus(dir.path(), "x", "Test").unwrap();
    let paths: Vec<&str> = c.documents.iter().map(|d| d.path.as_str()).collect();
    assert_eq!(paths, ["a.txt", "b/1.txt", "b/2.txt"]);
    assert_eq!(c, load_corpus(dir.path(), "x", "Test").unwrap());
}

#[test]
fn bom_is_stripped() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "\u{FEFF}नमस्ते");
    let c = load_corpus(dir.path(), "x", "Test").unwrap();
    assert_eq!(c.documents[0].raw_text, "नमस्ते");
}

#[test]
fn invalid_utf8_reports_path_and_offset() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "ok.txt", "ठीक");
    write(dir.path(), "bad.txt", b"abc\xffdef");
    match load_corpus(dir.path(), "x", "Test") {
        Err(Error::InvalidUtf8 { path, offset }) => {
            assert!(path.ends_with("bad.txt"));
            assert_eq!(offset, 3);
        }
        other => panic!("expected InvalidUtf8, got {other:?}"),
    }
}

#[test]
fn missing_and_empty_roots() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(load_corpus(&dir.path().join("nope"), "x", "T"), Err(Error::MissingDirectory(_))));
    write(dir.path(), "only.md", "x");
    assert!(matches!(load_corpus(dir.path(), "x", "T"), Err(Error::EmptyCorpus { .. })));
    let opts = LoadOptions { extension: "md".into(), ..LoadOptions::default() };
    assert_eq!(load_corpus_with(dir.path(), "x", "T", &opts).unwrap().documents.len(), 1);
}

#[test]
fn partial_metadata_leaves_unknowns() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["a.txt", "b.txt", "c.txt"] {
        write(dir.path(), f, "पाठ");
    }
    write(dir.path(), "metadata.tsv", format!("{HEADER}a.txt\tक\tख\tf\tBihar\t1930\nb.txt\tग\tघ\tm\t\t1960\n"));
    let c = load_corpus(dir.path(), "x", "T").unwrap();
    assert!(c.documents[2].meta.is_none());
    let s = metadata_summary(&c);
    assert_eq!(s.total_docs, 3);
    assert_eq!(s.gender_counts[&Gender::Female], 1);
    assert_eq!(s.gender_counts[&Gender::Male], 1);
    assert_eq!(s.gender_counts[&Gender::Unknown], 1);
    assert_eq!(s.era_counts[&Era::PreIndependence], 1);
    assert_eq!(s.era_counts[&Era::PostIndependence], 1);
    assert_eq!(s.era_counts[&Era::Unknown], 1);
    assert_eq!(s.state_counts["unknown"], 2);
    for counts in [s.gender_counts.values().sum::<usize>(), s.era_counts.values().sum(), s.state_counts.values().sum()]
    {
        assert_eq!(counts, 3);
    }
}

#[test]
fn female_fraction_stays_exact() {
    let dir = tempfile::tempdir().unwrap();
    let mut meta = String::from(HEADER);
    for i in 0..992 {
        let name = format!("d{i:04}.txt");
        write(dir.path(), &name, "पाठ");
        meta.push_str(&format!("{name}\t\t\t{}\t\t\n", if i < 48 { "f" } else { "m" }));
    }
    write(dir.path(), "metadata.tsv", meta);
    let s = metadata_summary(&load_corpus(dir.path(), "x", "T").unwrap());
    assert_eq!(s.total_docs, 992);
    assert_eq!(s.female_fraction, 48.0 / 992.0);
    assert_eq!(format!("{:.4}", s.female_fraction), "0.0484");
}

#[test]
fn malformed_metadata_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "पाठ");
    write(dir.path(), "metadata.tsv", "file\ttitle\n");
    assert!(matches!(load_corpus(dir.path(), "x", "T"), Err(Error::Malformed { .. })));
    write(dir.path(), "metadata.tsv", format!("{HEADER}a.txt\tक\tख\tf\tBihar\tlate\n"));
    assert!(matches!(load_corpus(dir.path(), "x", "T"), Err(Error::Malformed { line: 2, .. })));
}
