use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn demo_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/demo/demo.toml")
}

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stoplemma")).args(args).arg("--output-dir").arg(out).output().unwrap()
}

fn files_under(dir: &Path) -> Vec<String> {
    let mut out = Vec::new();
    if let Ok(entries) = fs::read_dir(dir) {
        for e in entries {
            let p = e.unwrap().path();
            if p.is_dir() {
                out.extend(files_under(&p));
            } else {
                out.push(p.display().to_string());
            }
        }
    }
    out
}

#[test]
fn freq_writes_tables_and_summary() {
    let out = tempfile::tempdir().unwrap();
    let cfg = demo_config();
    let o = run(&["freq", "--config", cfg.to_str().unwrap(), "--warn-oov"], out.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not in lexicon"));
    let summary = fs::read_to_string(out.path().join("freq/corpora.tsv")).unwrap();
    assert!(summary.starts_with("source\tdomain\tdocuments"));
    assert_eq!(summary.lines().count(), 3);
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.path().join("freq/corpora.json")).unwrap()).unwrap();
    assert_eq!(json["corpora"][0]["source"], "stories");
    assert_eq!(json["corpora"][0]["metadata"]["total_docs"], 4);
    let inputs = json["provenance"]["inputs"].as_array().unwrap();
    assert!(inputs.iter().all(|i| i["sha256"].as_str().unwrap().len() == 64));
    let lemmas = fs::read_to_string(out.path().join("freq/stories.lemmas.tsv")).unwrap();
    assert!(lemmas.lines().all(|l| l.split('\t').count() == 2));
}

#[test]
fn flags_override_config() {
    let out = tempfile::tempdir().unwrap();
    let cfg = demo_config();
    let o = run(&["induce", "--config", cfg.to_str().unwrap(), "--k-b", "all", "--format", "json"], out.path());
    assert!(o.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.path().join("induce/induction_report.json")).unwrap()).unwrap();
    assert_eq!(report["provenance"]["parameters"]["k_b"], "all");
    assert!(!out.path().join("induce/set_a.txt").exists());
    assert!(out.path().join("induce/stoplemmas.txt").exists());
}

#[test]
fn overlap_on_bundled_rows_without_config() {
    let out = tempfile::tempdir().unwrap();
    let o = run(&["overlap", "--source", "rows", "--k", "10"], out.path());
    assert!(o.status.success());
    let tsv = fs::read_to_string(out.path().join("overlap/overlap.tsv")).unwrap();
    assert_eq!(tsv.lines().count(), 18);
    assert_eq!(tsv.lines().filter(|l| l.ends_with("\t8")).count(), 5);
}

#[test]
fn assess_reports_the_single_miss() {
    let out = tempfile::tempdir().unwrap();
    let cfg = demo_config();
    let o = run(&["assess", "--config", cfg.to_str().unwrap()], out.path());
    assert!(o.status.success());
    let text = fs::read_to_string(out.path().join("assess/coverage.txt")).unwrap();
    assert!(text.contains("coverage: 73/74"));
    assert!(text.contains("misses: जरूर"));
}

#[test]
fn input_errors_exit_one_and_write_nothing() {
    let out = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "[[corpus]]\nid = \"a\"\npath = \"missing\"\n").unwrap();
    let o = run(&["freq", "--config", cfg.to_str().unwrap()], out.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(files_under(out.path()).is_empty());

    fs::write(&cfg, "k_a = 0\n").unwrap();
    assert_eq!(run(&["induce", "--config", cfg.to_str().unwrap()], out.path()).status.code(), Some(1));

    let o = run(&["assess", "--mapping", dir.path().join("none.tsv").to_str().unwrap()], out.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(files_under(out.path()).is_empty());
}

#[test]
fn all_undefined_correlation_exits_two() {
    let out = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("c")).unwrap();
    fs::write(dir.path().join("c/a.txt"), "क ख ग क ख क").unwrap();
    // Nothing is tagged with a grouped tag, so every membership vector is constant.
    fs::write(dir.path().join("pos.tsv"), "क\tXX\n").unwrap();
    fs::write(dir.path().join("run.toml"), "pos_lexicon = \"pos.tsv\"\n[[corpus]]\nid = \"c\"\npath = \"c\"\n")
        .unwrap();
    let cfg = dir.path().join("run.toml");
    let o = run(&["posstats", "--config", cfg.to_str().unwrap()], out.path());
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(files_under(out.path()).is_empty());
}
