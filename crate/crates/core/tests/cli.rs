use std::io::Write;
use std::process::Command;

use carroll_syllogism::cli::run;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("syllogism").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, _) = run_cli(args);
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

#[test]
fn check_verdicts() {
    let (code, out, _) = run_cli(&["check", "AAA-1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("Valid"));
    assert!(out.contains("premises conclusion: {0,1,4,5,8,9,12,13}"));

    let (code, out, _) = run_cli(&["check", "AAI-1"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().next(), Some("Invalid"));

    let (code, _, _) = run_cli(&["check", "AAI-1", "--assume", "s"]);
    assert_eq!(code, 0);
    let (code, _, _) = run_cli(&["check", "AAI-3", "--assume", "m"]);
    assert_eq!(code, 0);
}

#[test]
fn check_statements() {
    let (code, out, _) = run_cli(&["check", "All men are mortal; All Greeks are men; All Greeks are mortal"]);
    assert_eq!(code, 0);
    assert!(out.contains("AAA-1"));
    // unquoted words are joined back together
    let (code, out, _) = run_cli(&["check", "No", "P", "are", "M;", "All", "S", "are", "M;", "No", "S", "are", "P"]);
    assert_eq!(code, 0);
    assert!(out.contains("EAE-2"));
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        vec!["check", "AAAA-1"],
        vec!["check", "AAA-9"],
        vec!["check", "Most S are P; All S are M; All S are P"],
        vec!["check", "All X are P; All S are Y; All S are P"],
        vec!["check", "AAA-1", "--assume", "q"],
        vec!["star", "16", "0"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = run_cli(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn json_schema_and_format_independent_exit() {
    let (code, v) = json(&["check", "EAO-1", "--assume", "s", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["mood"], "EAO-1");
    assert_eq!(v["condition"], "s");
    assert_eq!(v["valid"], true);
    assert_eq!(v["oracle_valid"], true);
    assert_eq!(v["rule_violations"], serde_json::json!([]));

    let (code, v) = json(&["check", "OOO-1", "--format", "json", "--no-oracle"]);
    assert_eq!(code, 1);
    assert!(v["oracle_valid"].is_null());
    assert!(v["rule_violations"].as_array().unwrap().iter().any(|r| r == "1a"));

    for mood in ["AAA-1", "AAA-2", "EIO-4", "OOO-3"] {
        let (text_code, _, _) = run_cli(&["check", mood]);
        let (json_code, _, _) = run_cli(&["check", mood, "--format", "json"]);
        assert_eq!(text_code, json_code, "{mood}");
    }
}

#[test]
fn star_command() {
    assert_eq!(run_cli(&["star", "3", "3"]).1.trim(), "{6,7,9,11,13,14,15}");
    assert_eq!(run_cli(&["star", "8", "4"]).1.trim(), "{2}");
    assert_eq!(run_cli(&["star", "1", "4"]).1.trim(), "undefined");
}

#[test]
fn table_verify_against_bundled_fixture() {
    let (code, out, _) = run_cli(&["table", "--verify"]);
    // the printed H'1 entries at (7,15) and (13,15) cannot be derived
    assert_eq!(code, 1);
    assert!(out.contains("7 * 15"));
    assert!(out.contains("13 * 15"));
    assert!(out.contains("2 of 256 entries differ"));
}

#[test]
fn table_verify_with_fixture_override() {
    let (_, derived, _) = run_cli(&["table"]);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "version 1").unwrap();
    for line in derived.lines().filter(|l| l.contains(" = ")) {
        let (key, value) = line.split_once(" = ").unwrap();
        let (a, b) = key.split_once(" * ").unwrap();
        let members = value.trim_matches(['{', '}']).replace(',', " ");
        writeln!(file, "{a} {b}: {members}").unwrap();
    }
    let path = file.path().to_str().unwrap();
    let (code, out, _) = run_cli(&["table", "--verify", "--fixture", path]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 of 256 entries differ"));

    let (code, _, err) = run_cli(&["table", "--verify", "--fixture", "/nonexistent/fixture.txt"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read fixture"));
}

#[test]
fn oracle_diff_is_clean() {
    let (code, out, _) = run_cli(&["oracle-diff"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0 disagreements over 1024 cases");
}

#[test]
fn enumerate_formats() {
    let (code, out, _) = run_cli(&["enumerate"]);
    assert_eq!(code, 0);
    assert!(out.contains("Figure I"));
    assert!(out.trim_end().ends_with("15 moods"));

    let (code, v) = json(&["enumerate", "--assume", "p", "--only-conditional", "--format", "json"]);
    assert_eq!(code, 0);
    let moods: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["mood"].as_str().unwrap()).collect();
    assert_eq!(moods, ["AAI-4"]);

    let (code, out, _) = run_cli(&["enumerate", "--assume", "m", "--only-conditional", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let moods: Vec<&str> = rows.iter().map(|r| &r[0]).collect();
    assert_eq!(moods, ["AAI-3", "EAO-3", "EAO-4"]);
    assert_eq!(&rows[0][2], "m");
}

#[test]
fn render_command() {
    let (code, out, _) = run_cli(&["render", "EAE-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("Major premise: No M are P"));
    assert!(out.contains("Minor premise: All S are M"));
    assert!(out.contains("Conclusion: No S are P"));
    assert_eq!(out.matches("+----+----+----+").count(), 12);

    let (_, out, _) = run_cli(&["render", "All dogs are pets; Some cats are dogs; Some cats are pets"]);
    assert!(out.contains("pets'"));
    assert!(out.contains("Some cats are dogs"));
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_syllogism"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&["check", "AAA-1"]), Some(0));
    assert_eq!(status(&["check", "AAA-2"]), Some(1));
    assert_eq!(status(&["check", "nonsense"]), Some(2));
    assert_eq!(status(&["--help"]), Some(0));
}
