use std::process::{Command, Output};

fn facepair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facepair")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = facepair(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn h1_examples() {
    assert_eq!(stdout(&["h1", "--family", "m24", "--n", "6"]), "Z3 + Z9 + Z18\n");
    assert_eq!(stdout(&["h1", "--family", "m25", "--n", "2"]), "Z3\n");
    assert_eq!(stdout(&["h1", "--family", "m25", "--n", "4", "--mode", "cw"]), "Z3 + Z3 + Z6\n");
}

#[test]
fn symmetry_report() {
    let text = stdout(&["symmetry", "--family", "m25", "--n", "6", "--step", "2"]);
    assert!(text.contains("components: 3"));
    assert_eq!(text.matches("index 3,").count(), 3);
    assert!(text.contains("note:"));
}

#[test]
fn gen_and_pi1_documents() {
    let doc = stdout(&["gen", "--family", "m24", "--n", "3"]);
    let parsed = facepair::io::parse_complex(&doc).unwrap();
    assert_eq!(parsed, facepair::build_m24(3).unwrap());

    let dir = std::env::temp_dir().join(format!("facepair-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m25.pg");
    assert_eq!(stdout(&["gen", "--family", "m25", "--n", "2", "--out", path.to_str().unwrap()]), "");
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        facepair::io::serialize_complex(&facepair::build_m25(2).unwrap())
    );
    std::fs::remove_dir_all(&dir).unwrap();

    let pres = stdout(&["pi1", "--family", "m24", "--n", "3"]);
    assert!(pres.lines().any(|l| l == "rel: a1 b3 -d"));
    let reduced = stdout(&["pi1", "--family", "m24", "--n", "3", "--simplify"]);
    assert!(reduced.starts_with("gens: c1 c2 c3\n"));
}

#[test]
fn analyze_and_table() {
    let text = stdout(&["analyze", "--family", "m25", "--n", "4"]);
    assert!(text.contains("sigma: 2 14 13 1"));
    assert!(text.contains("euler characteristic: 0"));
    let verbose = stdout(&["analyze", "--family", "m25", "--n", "4", "-v"]);
    assert!(verbose.lines().count() > text.lines().count());

    let table = stdout(&["table", "--family", "m25", "--from", "3", "--to", "6"]);
    let h: Vec<&str> = table
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split(" | ").nth(1).unwrap().trim())
        .collect();
    assert_eq!(h, vec!["Z2 + Z18", "Z3 + Z3 + Z6", "Z5 + Z5 + Z15", "Z8 + Z72"]);
}

#[test]
fn exit_codes() {
    let usage = facepair(&["h1", "--family", "m99", "--n", "3"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(usage.stdout.is_empty());

    let domain = facepair(&["symmetry", "--family", "m25", "--n", "5", "--step", "2"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(domain.stdout.is_empty());
    assert!(String::from_utf8_lossy(&domain.stderr).contains("even"));

    assert_eq!(facepair(&["h1", "--family", "m24", "--n", "0"]).status.code(), Some(1));
}
