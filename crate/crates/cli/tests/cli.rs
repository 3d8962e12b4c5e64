use std::io::Write;
use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-fusion")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const KC2_EXPLICIT: &str = "\
hopf-sc v1 p=5 k=1 dim=2
MULT
0 0 0 1
0 1 1 1
1 0 1 1
1 1 0 1
COMULT
0 0 0 1
1 1 1 1
UNIT
0 1
COUNIT
0 1
1 1
ANTIPODE
0 0 1
1 1 1
";

#[test]
fn validate_builtin_passes() {
    let o = cli(&["validate", "--builtin", "dual-kS3@p=7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.contains(": pass")), "{out}");
}

#[test]
fn validate_explicit_file() {
    let f = temp_file(KC2_EXPLICIT);
    let o = cli(&["validate", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn corrupted_file_fails_with_witness() {
    let f = temp_file(&KC2_EXPLICIT.replace("1 1 0 1\n", "1 1 0 2\n"));
    let o = cli(&["validate", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.contains(": fail") && l.contains("witness=")), "{out}");
}

#[test]
fn hypothesis_violation_exits_3() {
    let o = cli(&["pipeline", "--builtin", "kC2@p=2"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).starts_with("error: "));
    let o = cli(&["pipeline", "--builtin", "kS3@p=3"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn parse_error_exits_2() {
    let f = temp_file("hopf-sc v1 p=5 k=1 dim=2\nMULT\n0 0 zero 1\n");
    let o = cli(&["validate", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = cli(&["validate", "--builtin", "kQ8@p=7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pipeline_passes_and_is_deterministic() {
    let a = cli(&["pipeline", "--builtin", "kS3@p=7", "--seed", "3"]);
    let b = cli(&["pipeline", "--builtin", "kS3@p=7", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("report: hopf-fusion v1\n"));
    assert!(out.contains("check Thm1.3: pass"));
    assert!(!out.contains(": fail"));
}

#[test]
fn through_marks_later_stages_not_applicable() {
    let o = cli(&["pipeline", "--builtin", "kC3@p=5", "--through", "uv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("check Prop2.6: pass"));
    assert!(out.contains("check Fusion.N: n/a"));
    assert!(out.contains("stage not requested"));
    let o = cli(&["pipeline", "--builtin", "kC3@p=5", "--through", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn l_table_equals_n_table() {
    let n = cli(&["export", "--builtin", "kS3@p=7", "--table", "N"]);
    let l = cli(&["export", "--builtin", "kS3@p=7", "--table", "L"]);
    assert_eq!(n.status.code(), Some(0));
    assert_eq!(n.stdout, l.stdout);
}

#[test]
fn s3_two_dimensional_square() {
    let o = cli(&["export", "--builtin", "kS3@p=7", "--table", "N"]);
    let out = stdout(&o);
    let labels: Vec<&str> = out.lines().next().unwrap().split_whitespace().skip(1).collect();
    assert_eq!(labels.len(), 3);
    // The 2-dimensional simple is the label whose square has three constituents.
    let entries: Vec<(usize, usize, usize, i64)> = out
        .lines()
        .skip(1)
        .map(|l| {
            let v: Vec<&str> = l.split_whitespace().collect();
            (v[0].parse().unwrap(), v[1].parse().unwrap(), v[2].parse().unwrap(), v[3].parse().unwrap())
        })
        .collect();
    let square = |a: usize| -> Vec<i64> {
        (0..3).map(|c| entries.iter().find(|e| (e.0, e.1, e.2) == (a, a, c)).map_or(0, |e| e.3)).collect()
    };
    assert!((0..3).any(|a| square(a) == [1, 1, 1]), "{out}");
}

#[test]
fn smash_table_size() {
    let o = cli(&["export", "--builtin", "kC2@p=5", "--table", "smash"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap().split_whitespace().count(), 1 + 8);
    assert_eq!(lines.count(), 64);
}

#[test]
fn subcategory_table_exports() {
    let o = cli(&["export", "--builtin", "kC2@p=5", "--table", "C"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next().unwrap().split_whitespace().count(), 1 + 4);
}
