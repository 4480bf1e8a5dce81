use std::path::Path;
use std::process::{Command, Output};

use isg::golden;
use isg::text;

fn isg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isg"))
        .args(args)
        .env_remove("ISG_GROUP_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_listing(dir: &Path, name: &str, degree: usize, listing: &[&str]) -> String {
    let path = dir.join(name);
    let mut body = format!("degree: {degree}\n");
    for e in listing {
        body.push_str(e);
        body.push('\n');
    }
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn parse_reports_rank() {
    let o = isg(&["parse", "-n", "8", "(1,4,5,8](2,3,6,7]"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("canonical: (1,4,5,8](2,3,6,7]\n"));
    assert!(text.contains("rank: 6\n"));

    let o = isg(&["parse", "-n", "3", "0"]);
    assert!(stdout(&o).starts_with("canonical: 0\n"));
    assert!(stdout(&o).contains("rank: 0\n"));
}

#[test]
fn parse_errors_exit_2() {
    let o = isg(&["parse", "-n", "3", "(1,9]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("point 9 exceeds degree 3"));
}

#[test]
fn close_and_check_the_five_element_semigroup() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("five.txt");
    let o = isg(&[
        "close",
        "-n",
        "3",
        "(1,2)(3)",
        "(1,3]2]",
        "-o",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = text::read_semigroup(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(s.len(), 5);

    let f = file.to_str().unwrap();
    let o = isg(&[
        "check",
        "--in",
        f,
        "-p",
        "semitransitive",
        "-p",
        "transitive",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("semitransitive: yes\ntransitive: no\n"));
    let o = isg(&[
        "check",
        "--in",
        f,
        "-p",
        "semitransitive",
        "-p",
        "minimal-semitransitive",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_the_brandt_listing() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_listing(dir.path(), "b17.txt", 8, &golden::BRANDT_17);
    let o = isg(&[
        "check",
        "--in",
        &f,
        "-p",
        "transitive",
        "-p",
        "inverse",
        "-p",
        "zero-simple",
        "-p",
        "brandt",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("transitive: yes\ninverse: yes\nzero-simple: yes\nbrandt: yes\n"));
}

#[test]
fn check_identity_only() {
    let o = isg(&["check", "-n", "2", "(1)(2)", "-p", "transitive"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("transitive: no"));
}

#[test]
fn check_rejects_unclosed_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_listing(dir.path(), "bad.txt", 2, &["(1,2]"]);
    assert_eq!(isg(&["check", "--in", &f]).status.code(), Some(2));
}

#[test]
fn classify_minimal_transitive() {
    let o = isg(&["classify", "minimal-transitive", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(text::read_presentations(&out).unwrap().len(), 2);
    assert!(out.contains("divisor,t,entries\n1,1,1\n3,1,1\n"));
}

#[test]
fn classify_over_the_cap_exits_2() {
    let o = isg(&["classify", "minimal-transitive", "-n", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--cap"));

    let o = Command::new(env!("CARGO_BIN_EXE_isg"))
        .args(["classify", "minimal-transitive", "-n", "5"])
        .env("ISG_GROUP_ORACLE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap 4"));
}

#[test]
fn classify_min_semitransitive() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_listing(dir.path(), "gt9.txt", 8, &golden::GT_9);
    let o = isg(&["classify", "min-semitransitive", "--in", &f]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("# k 4 |G| 2\n"));
    let p = text::read_presentations(&out).unwrap();
    assert_eq!(p[0].build().len(), 9);

    let f = write_listing(dir.path(), "five.txt", 3, &golden::FIVE_ELEMENT);
    let o = isg(&["classify", "min-semitransitive", "--in", &f]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn build_outputs_round_trip() {
    let o = isg(&[
        "build",
        "brandt",
        "-n",
        "8",
        "-g",
        "(1,2,3,4)",
        "--presentation",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let parsed = text::read_presentations(&out).unwrap();
    assert_eq!(text::write_presentation(&parsed[0]), out);
    assert_eq!(parsed[0].build().len(), 17);

    let o = isg(&["build", "gt", "-n", "6", "-k", "3", "-g", "(1,2)"]);
    let out = stdout(&o);
    let s = text::read_semigroup(&out).unwrap();
    assert_eq!(s.len(), 7);
    assert_eq!(text::write_semigroup(&s), out);
}

#[test]
fn build_from_a_presentation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let o = isg(&[
        "build",
        "gt",
        "-n",
        "8",
        "-k",
        "4",
        "-g",
        "(1,2)",
        "--presentation",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = isg(&["build", "gt", "--in", path.to_str().unwrap()]);
    let s = text::read_semigroup(&stdout(&o)).unwrap();
    assert_eq!(s.len(), 9);
}

#[test]
fn search_streams_round_trip() {
    let o = isg(&["search", "-n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let (list, complete) = text::read_stream(&out).unwrap();
    assert_eq!(list.len(), 3);
    assert!(complete);
    assert_eq!(text::write_stream(&list, complete), out);
}

#[test]
fn search_budget_exhaustion_exits_2() {
    let o = isg(&["search", "-n", "3", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("incomplete"));
}

#[test]
fn search_semitransitive_with_cap() {
    let o = isg(&[
        "search",
        "-n",
        "3",
        "--cap",
        "4",
        "--target",
        "semitransitive",
        "--dedupe",
        "conjugation",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (list, _) = text::read_stream(&stdout(&o)).unwrap();
    assert!(!list.is_empty());
    assert!(list.iter().all(|s| s.len() == 4));
}

#[test]
fn verify_small_plan() {
    let o = isg(&["verify", "--n-max", "3", "--cases", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches(" PASS ").count(), 7);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(isg(&["close", "(1,2)"]).status.code(), Some(2));
    assert_eq!(isg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(isg(&["--help"]).status.code(), Some(0));
}
