use std::process::{Command, Output};

use qtwist::freealgebra::Params;
use qtwist::rmatrix::{rhat, specialize};
use qtwist::rootsystem::{Family, RSType};
use qtwist_cli::emit::{parse_csv, parse_json};

fn qtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtwist")).args(args).output().expect("binary runs")
}

fn qtwist_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtwist")).env("QTWIST_THREADS", threads).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn a1_two_parameter_entry() {
    let o = qtwist(&["rmatrix", "--type", "A", "--rank", "1", "--params", "two", "--format", "json"]);
    assert!(o.status.success());
    let (doc, m) = parse_json(&stdout(&o)).unwrap();
    assert_eq!(doc.dim, 4);
    assert_eq!(doc.convention, "flat=N*(i-1)+(j-1)");
    let e = doc.entries.iter().find(|e| (e.i, e.j, e.k, e.l) == (1, 2, 2, 1)).unwrap();
    assert_eq!(e.value, "s^(-1)");
    assert_eq!(m, rhat(RSType::of(Family::A, 1), Params::TwoParam).unwrap());
}

#[test]
fn one_parameter_is_the_specialization() {
    let one = qtwist(&["rmatrix", "--type", "C", "--rank", "2", "--params", "one"]);
    let two = qtwist(&["rmatrix", "--type", "C", "--rank", "2", "--params", "two"]);
    let (_, m1) = parse_json(&stdout(&one)).unwrap();
    let (_, m2) = parse_json(&stdout(&two)).unwrap();
    assert_eq!(specialize(&m2).unwrap(), specialize(&m1).unwrap());
    assert_eq!(m1, rhat(RSType::of(Family::C, 2), Params::OneParam).unwrap());
}

#[test]
fn csv_and_json_round_trip() {
    for (ty, rank) in [("B", "2"), ("D", "3")] {
        let j = qtwist(&["rmatrix", "--type", ty, "--rank", rank, "--params", "two", "--format", "json"]);
        let c = qtwist(&["rmatrix", "--type", ty, "--rank", rank, "--params", "two", "--format", "csv"]);
        let (doc, from_json) = parse_json(&stdout(&j)).unwrap();
        let n = (doc.dim as f64).sqrt() as usize;
        let from_csv = parse_csv(&stdout(&c), n).unwrap();
        assert_eq!(from_json, from_csv);
    }
}

#[test]
fn spectral_matrix_round_trips() {
    let j = qtwist(&["rmatrix", "--type", "B", "--rank", "1", "--spectral"]);
    let (doc, m) = parse_json(&stdout(&j)).unwrap();
    assert!(doc.spectral);
    assert_eq!(m, qtwist::affine::baxterize(RSType::of(Family::B, 1), Params::TwoParam).unwrap());
}

#[test]
fn numeric_mode() {
    let o =
        qtwist(&["rmatrix", "--type", "A", "--rank", "1", "--params", "numeric", "--r", "3", "--s", "1/2", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1,1;1,1) 1\n(1,2;2,1) 2\n(2,1;1,2) 3\n(2,1;2,1) -5\n(2,2;2,2) 1\n");
    // Type C carries half-integer exponents, so r and s must be rational squares.
    let bad = qtwist(&["rmatrix", "--type", "C", "--rank", "2", "--params", "numeric", "--r", "2", "--s", "3"]);
    assert_eq!(bad.status.code(), Some(2));
    let good = qtwist(&["rmatrix", "--type", "C", "--rank", "2", "--params", "numeric", "--r", "4", "--s", "9/4"]);
    assert_eq!(good.status.code(), Some(0));
}

#[test]
fn latex_block() {
    let o = qtwist(&["rmatrix", "--type", "A", "--rank", "1", "--format", "latex"]);
    let s = stdout(&o);
    assert!(s.contains("\\begin{pmatrix}") && s.contains("s^{-1}"));
    assert_eq!(s.matches("\\\\").count(), 4);
}

#[test]
fn verify_passes() {
    let o = qtwist(&["verify", "braid", "--type", "B", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
    let o = qtwist(&["verify", "pairing", "--type", "A", "--rank", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("gamma"));
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS pairing")).count(), 6);
}

#[test]
fn corrupted_golden_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let good = stdout(&qtwist(&["rmatrix", "--type", "B", "--rank", "2"]));
    let path = dir.path().join("b2.json");
    std::fs::write(&path, &good).unwrap();
    let p = path.to_str().unwrap();
    let o = qtwist(&["verify", "braid", "--type", "B", "--rank", "2", "--golden", p]);
    assert_eq!(o.status.code(), Some(0));

    let bad = good.replacen("\"value\": \"1\"", "\"value\": \"2\"", 1);
    std::fs::write(&path, bad).unwrap();
    let o = qtwist(&["verify", "braid", "--type", "B", "--rank", "2", "--golden", p]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    let line = s.lines().find(|l| l.starts_with("FAIL golden")).unwrap();
    assert!(line.contains("entry ("), "{line}");

    let csv = stdout(&qtwist(&["rmatrix", "--type", "B", "--rank", "2", "--format", "csv"]));
    let cpath = dir.path().join("b2.csv");
    std::fs::write(&cpath, csv.replacen(",r^", ",2*r^", 1)).unwrap();
    let o = qtwist(&["verify", "ybe", "--type", "B", "--rank", "2", "--golden", cpath.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tables() {
    let o = qtwist(&["pbw", "--type", "A", "--rank", "2"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 3);
    let o = qtwist(&["pairing", "--type", "B", "--rank", "2", "--oracle"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().skip(1).filter(|l| l.ends_with("yes")).count(), 4);
    let o = qtwist(&["lyndon", "--type", "B", "--rank", "2", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "gamma,word,split,split_words\na1,[1],-,-\na1+a2,\"[1,2]\",a1 | a2,[1] [2]\na1+2a2,\"[1,2,2]\",a1+a2 | a2,\"[1,2] [2]\"\na2,[2],-,-\n"
    );
}

#[test]
fn theta_match() {
    let o = qtwist(&["theta", "--type", "A", "--rank", "2", "--height", "2", "--check-against-rmatrix"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("MATCH"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["rmatrix", "--type", "D", "--rank", "2"][..],
        &["rmatrix", "--type", "E", "--rank", "6"],
        &["rmatrix", "--type", "A", "--rank", "2", "--params", "numeric"],
        &["verify", "crossing", "--type", "A", "--rank", "2"],
        &["verify", "braid", "--type", "A", "--rank", "2", "--params", "numeric", "--r", "1", "--s", "2"],
        &["theta", "--type", "A", "--rank", "2", "--height", "7"],
        &["theta", "--type", "A", "--rank", "2", "--height", "1", "--check-against-rmatrix"],
        &["frobnicate"],
    ] {
        assert_eq!(qtwist(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_independent_of_thread_count() {
    let args = ["verify", "twist", "--type", "B", "--rank", "2", "--no-timing", "--instances", "30", "--format", "json"];
    let a = qtwist_threads(&args, "1");
    let b = qtwist_threads(&args, "4");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let m = ["rmatrix", "--type", "D", "--rank", "3", "--format", "csv"];
    assert_eq!(qtwist_threads(&m, "1").stdout, qtwist_threads(&m, "3").stdout);
}

#[test]
fn seed_changes_instances_not_verdicts() {
    let run = |seed: &str| {
        let o = qtwist(&["verify", "twist", "--type", "A", "--rank", "2", "--seed", seed, "--instances", "10", "--no-timing"]);
        assert!(o.status.success());
        stdout(&o)
    };
    assert_eq!(run("1"), run("1"));
    assert!(run("2").ends_with("passed\n"));
}
