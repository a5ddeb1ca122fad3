use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> PathBuf {
    root().join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bckalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_paths(args: &[&str], paths: &[&Path]) -> Output {
    let mut all: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    all.extend(paths.iter().map(|p| p.display().to_string()));
    let refs: Vec<&str> = all.iter().map(String::as_str).collect();
    run(&refs)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bckalg-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_passes_first_example() {
    let o = run_paths(&["verify", "--kind", "bck"], &[&fixture("ex3_1_bck.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bck: PASS"));
}

#[test]
fn verify_reports_witnesses() {
    let o = run_paths(
        &["verify", "--kind", "bck", "--positive-implicative"],
        &[&fixture("ex3_1_bck.alg")],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fails at (B, A, A)"));

    let o = run_paths(
        &["verify", "--kind", "wajsberg"],
        &[&fixture("ex3_7_wajsberg.alg")],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("wajsberg: FAIL"));
}

#[test]
fn input_errors_exit_two() {
    let dir = scratch("bad-input");
    let bad = dir.join("bad.alg");
    fs::write(
        &bad,
        "kind: bck\norder: 2\nelements: O A\nzero: O\ntable:\nO O\nA Q\n",
    )
    .unwrap();
    let o = run_paths(&["verify", "--kind", "bck"], &[&bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a declared element"));

    let o = run_paths(
        &["verify", "--kind", "wajsberg"],
        &[&fixture("ex3_1_bck.alg")],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run_paths(&["verify", "--kind", "bck"], &[&dir.join("missing.alg")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--order", "1"]).status.code(), Some(2));
    let _ = fs::remove_dir_all(dir);
}

#[test]
fn convert_matches_checked_in_fixture() {
    let o = run_paths(
        &["convert", "--to", "bck"],
        &[&fixture("ex3_2_wajsberg.alg")],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        fs::read_to_string(fixture("ex3_2_bck.alg")).unwrap()
    );

    let o = run_paths(
        &["convert", "--from", "bck", "--to", "wajsberg"],
        &[&fixture("ex3_3_bck.alg")],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        fs::read_to_string(fixture("ex3_3_wajsberg.alg")).unwrap()
    );
}

#[test]
fn convert_refuses_invalid_input() {
    let o = run_paths(
        &["convert", "--to", "mv"],
        &[&fixture("ex3_7_wajsberg.alg")],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fails at"));
}

#[test]
fn iseki_renders_extension() {
    let o = run_paths(&["iseki"], &[&fixture("ex3_2_bck.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("order: 5\nelements: O A B E 1\n"));
    assert!(text.ends_with("1 1 1 1 O\n"));
}

#[test]
fn enumerate_writes_one_file_per_factorization() {
    let dir = scratch("enumerate");
    let o = run(&["enumerate", "--order", "4", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pi_4 = 2\n"));
    let mut files: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(files, ["w4_2x2.alg", "w4_4.alg"]);
    let chain = dir.join("w4_4.alg");
    let o = run_paths(&["verify", "--kind", "wajsberg"], &[&chain]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&[
        "enumerate",
        "--order",
        "8",
        "--kind",
        "bck",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(stdout(&o).starts_with("pi_8 = 3\n"));
    for label in ["8", "2x4", "2x2x2"] {
        let path = dir.join(format!("b8_{label}.alg"));
        let o = run_paths(&["verify", "--kind", "bck", "--commutative"], &[&path]);
        assert_eq!(o.status.code(), Some(0), "{label}");
    }
    let _ = fs::remove_dir_all(dir);
}

#[test]
fn sub_lists_substructures() {
    let o = run_paths(&["sub"], &[&fixture("ex3_2_bck.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "proper subalgebras (4):\n  {O,A}\n  {O,B}\n  {O,E}\n  {O,A,B}\nproper ideals (2):\n  {O,A}\n  {O,B}\n"
    );
    let o = run_paths(&["sub", "--ideals", "--all"], &[&fixture("ex3_1_bck.alg")]);
    assert_eq!(stdout(&o), "ideals (2):\n  {O}\n  {O,A,B,E}\n");
}

#[test]
fn iso_reports_mapping_or_failure() {
    let o = run_paths(
        &["iso"],
        &[&fixture("ex3_1_bck.alg"), &fixture("ex3_2_bck.alg")],
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "non-isomorphic\n");

    let o = run_paths(
        &["iso"],
        &[&fixture("ex3_4_bck.alg"), &fixture("ex3_5_bck.alg")],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);

    let o = run_paths(
        &["iso", "--poset"],
        &[&fixture("ex3_1_bck.alg"), &fixture("ex3_1_wajsberg.alg")],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("O -> O\n"));
}

#[test]
fn check_paper_is_deterministic_and_matches_golden() {
    let dir = root().join("fixtures");
    let first = run_paths(&["check-paper"], &[&dir]);
    let second = run_paths(&["check-paper"], &[&dir]);
    assert_eq!(first.stdout, second.stdout);
    // the printed seventh example is inconsistent, so the run fails
    assert_eq!(first.status.code(), Some(1));
    let golden = fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/check_paper.txt"),
    )
    .unwrap();
    assert_eq!(stdout(&first), golden);
    assert!(golden.contains("cell (E,U): printed T, recomputed Y"));
}
