use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const L_EX: &str = r#"{"k":9,"sticks":["8","7","6","1","1","1","1","1","1","1","1","1","1","1","1","1"]}"#;

fn stickcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stickcut"))
        .args(args)
        .env_remove("STICKCUT_SEED")
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn solve_running_example_with_defaults() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", L_EX);
    let out = stickcut(&["solve", "--input", &input]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"l_star\":\"2\",\"cuts\":8,\"pieces\":10,\"strategy\":\"select+sandwich\",\"candidates\":6,\"early_answer\":false}\n"
    );
    assert!(out.stderr.is_empty());
}

#[test]
fn solve_with_quadratic_search() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", L_EX);
    let out = stickcut(&["solve", "--input", &input, "--algorithm", "search", "--bounds", "quadratic"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["l_star"], "2");
    assert_eq!(r["candidates"], 27);
    assert_eq!(r["strategy"], "search+quadratic");
}

#[test]
fn solve_with_plan() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", L_EX);
    let r = report(&stickcut(&["solve", "--input", &input, "--plan", "--seed", "9"]));
    let plan = r["plan"].as_array().unwrap();
    assert_eq!(plan.len(), 16);
    assert_eq!(plan[0], serde_json::json!({"index": 0, "m": 4, "c": 3}));
    assert_eq!(plan[3], serde_json::json!({"index": 3, "m": 0, "c": 0}));
}

#[test]
fn solve_single_stick() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "one.json", r#"{"k":1,"sticks":["5"]}"#);
    let r = report(&stickcut(&["solve", "--input", &input]));
    assert_eq!(r["l_star"], "5");
    assert_eq!(r["cuts"], 0);
    assert_eq!(r["early_answer"], true);
}

#[test]
fn solve_reports_input_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"k":1,"sticks":["0"]}"#);
    let out = stickcut(&["solve", "--input", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-positive length"));

    let missing = dir.path().join("missing.json");
    let out = stickcut(&["solve", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let input = write(&dir, "ex.json", L_EX);
    let out = stickcut(&["solve", "--input", &input, "--bounds", "cubic"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_from_environment() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", L_EX);
    let out = Command::new(env!("CARGO_BIN_EXE_stickcut"))
        .args(["solve", "--input", &input])
        .env("STICKCUT_SEED", "12345")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(report(&out)["l_star"], "2");
    let out = Command::new(env!("CARGO_BIN_EXE_stickcut"))
        .args(["solve", "--input", &input])
        .env("STICKCUT_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_agrees() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", L_EX);
    let out = stickcut(&["verify", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.split_whitespace().nth(1) == Some("2")), "{text}");

    let primes = dir.path().join("primes.json");
    let gen = stickcut(&["gen", "--family", "primes", "--n", "10", "--k", "7", "--out", primes.to_str().unwrap()]);
    assert!(gen.status.success());
    let out = stickcut(&["verify", "--input", primes.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let bad = write(&dir, "bad.json", "{\"k\":1,");
    assert_eq!(stickcut(&["verify", "--input", &bad]).status.code(), Some(1));
}

#[test]
fn gen_example_writes_the_running_example() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("ex.json");
    let out = stickcut(&["gen", "--family", "example", "--m", "4", "--x", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&path).unwrap(), format!("{L_EX}\n"));
}

#[test]
fn gen_rejects_bad_family_parameters() {
    let out = stickcut(&["gen", "--family", "example", "--m", "6", "--x", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
    let out = stickcut(&["gen", "--family", "random", "--n", "0", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_random_is_reproducible() {
    let args = ["gen", "--family", "random", "--n", "20", "--k", "30", "--seed", "4"];
    let a = stickcut(&args);
    let b = stickcut(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bench_emits_csv() {
    let out = stickcut(&[
        "bench", "--family", "random", "--sizes", "100,200", "--repeat", "1", "--seed", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("strategy,n,k,candidates,nanos_median"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 12);
    for row in &rows {
        assert_eq!(row.len(), 5);
        let n: u64 = row[1].parse().unwrap();
        let candidates: u64 = row[3].parse().unwrap();
        row[4].parse::<u128>().unwrap();
        if row[0].ends_with("sandwich") {
            assert!(candidates <= 3 * n);
        }
    }
}

#[test]
fn bench_sandwich_is_smaller_than_quadratic() {
    let out = stickcut(&[
        "bench", "--sizes", "1000", "--repeat", "1",
        "--strategies", "select+sandwich,select+quadratic",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let counts: Vec<u64> = text.lines().skip(1).map(|l| l.split(',').nth(3).unwrap().parse().unwrap()).collect();
    assert!(counts[0] < counts[1], "{text}");
}

#[test]
fn bench_rejects_bad_parameters() {
    assert_eq!(stickcut(&["bench", "--sizes", "0"]).status.code(), Some(1));
    assert_eq!(stickcut(&["bench"]).status.code(), Some(1));
}

#[test]
fn curve_of_running_example() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", L_EX);
    let out = stickcut(&["curve", "--input", &input, "--from", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 18);
    let at = |l: &str| rows.iter().find(|r| r[0] == l).map(|r| (r[2], r[3])).unwrap();
    assert_eq!(at("2"), ("10", "8"));
    assert_eq!(at("7/3"), ("8", "7"));
    assert_eq!(at("8"), ("1", "0"));
}

#[test]
fn report_round_trips_through_the_parser() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "f.json", r#"{"k":7,"sticks":["11/2","24/5","9/2","4","7/2"]}"#);
    let r = report(&stickcut(&["solve", "--input", &input]));
    let l: stickcut::Rational = r["l_star"].as_str().unwrap().parse().unwrap();
    let inst = stickcut::instances::parse(&fs::read_to_string(Path::new(&input)).unwrap()).unwrap();
    assert_eq!(l, stickcut::solver::oracle_scan(&inst).unwrap());
}
