//! Black-box tests of the command line: exit codes, flags, output modes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lexicon() -> String {
    fixtures().join("lexicon.json").display().to_string()
}

fn corpus(name: &str) -> String {
    fixtures().join("corpus").join(name).display().to_string()
}

#[test]
fn missing_required_flags_is_a_usage_error() {
    let output = run(&["enrich"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn unreadable_lexicon_is_an_input_error() {
    let output = run(&[
        "enrich",
        "--lexicon",
        "/nonexistent/lexicon.json",
        "--corpus",
        &corpus("kollidieren.txt"),
    ]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("error:"), "{stderr}");
}

#[test]
fn lexicon_integrity_failure_reports_position_and_exits_2() {
    let dir = std::env::temp_dir().join("subcat-bad-lexicon");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"synsets": [{"id": "a", "pos": "noun", "lemmas": ["A"], "hypernyms": ["missing"]}], "verbs": []}"#,
    )
    .unwrap();
    let output = run(&[
        "enrich",
        "--lexicon",
        path.to_str().unwrap(),
        "--corpus",
        &corpus("kollidieren.txt"),
    ]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("missing"), "{stderr}");
}

#[test]
fn zero_scope_window_is_a_usage_error() {
    let output = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--scope-window",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn lexinfo_unknown_lemma_exits_1() {
    let output = run(&["lexinfo", "--lexicon", &lexicon(), "qqqq"]);
    assert_eq!(output.status.code(), Some(1));

    let output = run(&["lexinfo", "--lexicon", &lexicon(), "versterben"]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("NN.BT"), "{stdout}");
}

#[test]
fn every_config_flag_is_documented_in_help() {
    let output = run(&["enrich", "--help"]);
    assert_eq!(output.status.code(), Some(0));
    let help = String::from_utf8_lossy(&output.stdout);
    for flag in [
        "--lexicon",
        "--corpus",
        "--verb",
        "--scope-window",
        "--no-adjunct-filter",
        "--min-evidence",
        "--pretagged",
        "--grammar",
        "--ne-config",
        "--format",
        "--out",
        "--jobs",
    ] {
        assert!(help.contains(flag), "missing {flag} in help:\n{help}");
    }
}

#[test]
fn out_directory_receives_one_file_per_verb() {
    let dir = std::env::temp_dir().join(format!("subcat-out-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let output = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--verb",
        "kollidieren",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let report = std::fs::read_to_string(dir.join("kollidieren.json")).unwrap();
    let golden = std::fs::read_to_string(fixtures().join("golden/kollidieren.json")).unwrap();
    assert_eq!(report, golden);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_and_tsv_formats_render() {
    let output = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--verb",
        "kollidieren",
        "--format",
        "text",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("verb: kollidieren"), "{stdout}");
    assert!(stdout.contains("mit"), "{stdout}");

    let output = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--verb",
        "kollidieren",
        "--format",
        "tsv",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("NN\tDer Pkw"), "{stdout}");
}

#[test]
fn chunk_dump_matches_raw_and_pretagged_input() {
    let raw = run(&[
        "chunk",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
    ]);
    assert_eq!(raw.status.code(), Some(0));
    let dump = String::from_utf8_lossy(&raw.stdout);
    assert!(dump.contains("NP\t4-6\tLKW\tnom,acc\t-"), "{dump}");
    assert!(dump.contains("PP\t7-10\tPKW\tdat\tmit"), "{dump}");
}

#[test]
fn no_adjunct_filter_counts_the_temporal_pp() {
    let filtered = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--corpus",
        &corpus("kontrolle.txt"),
        "--verb",
        "kollidieren",
    ]);
    let unfiltered = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--corpus",
        &corpus("kontrolle.txt"),
        "--verb",
        "kollidieren",
        "--no-adjunct-filter",
    ]);
    let on: serde_json::Value = serde_json::from_slice(&filtered.stdout).expect("json report");
    let off: serde_json::Value = serde_json::from_slice(&unfiltered.stdout).expect("json report");
    assert_eq!(
        on["preposition_counts"]["mit"], off["preposition_counts"]["mit"],
        "mit count must not change"
    );
    assert!(on["preposition_counts"]["an"].is_null());
    assert_eq!(off["preposition_counts"]["an"], 1);
}

#[test]
fn grammar_override_is_honored() {
    let dir = std::env::temp_dir().join("subcat-grammar");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("np-only.g");
    // NPs only: no PP rule, so no preposition statistics can arise.
    std::fs::write(&path, "NP -> determiner noun\nNP -> noun\nNP -> pronoun\n").unwrap();
    let output = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        &corpus("kollidieren.txt"),
        "--verb",
        "kollidieren",
        "--grammar",
        path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert!(report["preposition_counts"].as_object().unwrap().is_empty());
}

#[test]
fn ne_config_extends_the_gazetteers() {
    let dir = std::env::temp_dir().join("subcat-neconf");
    std::fs::create_dir_all(&dir).unwrap();
    let corpus_path = dir.join("mercedes.txt");
    std::fs::write(&corpus_path, "Der Fahrer kollidierte mit dem Mercedes.\n").unwrap();

    // Default gazetteers do not know "Mercedes": the head resolves through
    // the lexicon (and is unknown there).
    let default_run = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        corpus_path.to_str().unwrap(),
        "--verb",
        "kollidieren",
    ]);
    let report: serde_json::Value = serde_json::from_slice(&default_run.stdout).unwrap();
    assert_eq!(report["elements"][1]["categories"]["unknown"], 1);

    // With the fixture config, "Mercedes" is a vehicle name.
    let configured = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        corpus_path.to_str().unwrap(),
        "--verb",
        "kollidieren",
        "--ne-config",
        fixtures().join("ne_config.json").to_str().unwrap(),
    ]);
    let report: serde_json::Value = serde_json::from_slice(&configured.stdout).unwrap();
    assert_eq!(report["elements"][1]["categories"]["vehicle"], 1);
}

#[test]
fn pretagged_input_runs_the_same_pipeline() {
    let dir = std::env::temp_dir().join("subcat-vertical");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("doc.tsv");
    std::fs::write(
        &path,
        "sein\tdeterminer\t-\n\
LKW\tnoun\t-\n\
kollidierte\tverb-finite\tkollidieren\n\
mit\tpreposition\t-\n\
dem\tdeterminer\t-\n\
PKW\tnoun\t-\n\
.\tsentence-final\t-\n",
    )
    .unwrap();
    let output = run(&[
        "enrich",
        "--lexicon",
        &lexicon(),
        "--corpus",
        path.to_str().unwrap(),
        "--verb",
        "kollidieren",
        "--pretagged",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["preposition_counts"]["mit"], 1);
    assert_eq!(report["elements"][0]["fillers"][0], "sein LKW");
}
