use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn geodetic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geodetic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_graph(dir: &TempDir, name: &str, edges: &[(usize, usize)]) -> PathBuf {
    let path = dir.path().join(name);
    let text: String = edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect();
    fs::write(&path, text).unwrap();
    path
}

fn path4(dir: &TempDir) -> PathBuf {
    write_graph(dir, "p4.el", &[(0, 1), (1, 2), (2, 3)])
}

fn cycle5(dir: &TempDir) -> PathBuf {
    write_graph(dir, "c5.el", &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
}

fn complete(dir: &TempDir, n: usize) -> PathBuf {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    write_graph(dir, &format!("k{n}.el"), &edges)
}

/// `(algorithm, value)` pairs from `solve` output.
fn values(out: &Output) -> Vec<(String, String)> {
    stdout(out)
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split_whitespace();
            (it.next().unwrap().to_string(), it.next().unwrap().to_string())
        })
        .collect()
}

fn value_of(out: &Output, algo: &str) -> String {
    values(out)
        .into_iter()
        .find(|(a, _)| a == algo)
        .unwrap_or_else(|| panic!("{algo} missing from {}", stdout(out)))
        .1
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_all_on_path() {
    let dir = TempDir::new().unwrap();
    let out = geodetic(&["solve", s(&path4(&dir)), "--algo", "all"]);
    assert!(out.status.success());
    for algo in ["exact", "greedy", "greedy-addone", "locally-greedy"] {
        assert_eq!(value_of(&out, algo), "2", "{algo}");
    }
    assert!(stdout(&out).contains("optimal"));
}

#[test]
fn solve_all_on_complete_graph() {
    let dir = TempDir::new().unwrap();
    let out = geodetic(&["solve", s(&complete(&dir, 5)), "--algo", "all"]);
    assert!(out.status.success());
    for algo in [
        "exact",
        "greedy",
        "greedy-addone",
        "locally-greedy",
        "diameter-bound",
        "trivial-bound",
    ] {
        assert_eq!(value_of(&out, algo), "5", "{algo}");
    }
}

#[test]
fn solve_exact_and_brute_on_five_cycle() {
    let dir = TempDir::new().unwrap();
    let c5 = cycle5(&dir);
    let out = geodetic(&["solve", s(&c5), "--algo", "exact"]);
    assert!(out.status.success());
    assert_eq!(values(&out), vec![("exact".to_string(), "3".to_string())]);
    let out = geodetic(&["solve", s(&c5), "--algo", "brute"]);
    assert_eq!(value_of(&out, "brute"), "3");
}

#[test]
fn exhausted_budget_marks_value() {
    let dir = TempDir::new().unwrap();
    let out = geodetic(&[
        "generate",
        "--family",
        "ba",
        "--n",
        "30",
        "--density",
        "0.2",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1), "missing -o is a usage error");
    let graph = dir.path().join("ba.el");
    let out = geodetic(&[
        "generate",
        "--family",
        "ba",
        "--n",
        "30",
        "--density",
        "0.2",
        "--seed",
        "1",
        "-o",
        s(&graph),
    ]);
    assert!(out.status.success());
    let out = geodetic(&["solve", s(&graph), "--algo", "exact", "--node-limit", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("<=") && text.contains("budget-exhausted"), "{text}");
}

#[test]
fn one_based_input() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "p3.el", &[(1, 2), (2, 3)]);
    let out = geodetic(&["verify", s(&g), "--one-based", "--set", "1,3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("geodetic yes"));
}

#[test]
fn verify_reports_closure() {
    let dir = TempDir::new().unwrap();
    let p4 = path4(&dir);
    let out = geodetic(&["verify", s(&p4), "--set", "0,3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("geodetic yes"));
    assert!(stdout(&out).contains("closure 4 of 4"));

    let out = geodetic(&["verify", s(&p4), "--set", "0,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("geodetic no"));
    assert!(stdout(&out).contains("closure 3 of 4"));

    let out = geodetic(&["verify", s(&cycle5(&dir)), "--set", "0,2,3"]);
    assert!(stdout(&out).contains("geodetic yes"));

    let out = geodetic(&["verify", s(&p4), "--set", "0,7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn data_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let split = write_graph(&dir, "split.el", &[(0, 1), (2, 3)]);
    assert_eq!(geodetic(&["solve", s(&split)]).status.code(), Some(2));
    assert_eq!(
        geodetic(&["solve", s(&dir.path().join("missing.el"))]).status.code(),
        Some(2)
    );
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "0 1\n1 x\n").unwrap();
    let out = geodetic(&["solve", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(geodetic(&["solve"]).status.code(), Some(1));
    assert_eq!(geodetic(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(geodetic(&["--help"]).status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let p4 = path4(&dir);
    assert_eq!(geodetic(&["solve", s(&p4), "--time-limit", "0"]).status.code(), Some(1));
    assert_eq!(geodetic(&["solve", s(&p4), "--algo", "magic"]).status.code(), Some(1));
}

#[test]
fn export_ilp_counts_and_default_path() {
    let dir = TempDir::new().unwrap();
    let k2 = write_graph(&dir, "k2.el", &[(0, 1)]);
    let out = geodetic(&["export-ilp", s(&k2)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("variables 3"));
    assert!(stdout(&out).contains("constraints 5"));
    let first = fs::read(dir.path().join("k2.lp")).unwrap();

    let again = dir.path().join("again.lp");
    assert!(geodetic(&["export-ilp", s(&k2), "-o", s(&again)]).status.success());
    assert_eq!(first, fs::read(&again).unwrap());

    let p3 = write_graph(&dir, "p3.el", &[(0, 1), (1, 2)]);
    let out = geodetic(&["export-ilp", s(&p3)]);
    assert!(stdout(&out).contains("constraints 12"));
    let lp = fs::read_to_string(dir.path().join("p3.lp")).unwrap();
    assert_eq!(lp.matches(" >= 1").count(), 3);
    assert_eq!(lp.lines().filter(|l| l.contains(" <= ")).count(), 9);
}

#[test]
fn generate_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.el");
    let b = dir.path().join("b.el");
    let args = |p: &Path| {
        geodetic(&[
            "generate",
            "--family",
            "er",
            "--n",
            "10",
            "--density",
            "0.2",
            "--seed",
            "1",
            "-o",
            s(p),
        ])
    };
    let out = args(&a);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n 10\nm 9\nseed 1\n");
    assert!(args(&b).status.success());
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(fs::read_to_string(&a).unwrap().lines().count(), 9);

    for family in ["ws", "ba"] {
        let out = geodetic(&[
            "generate",
            "--family",
            family,
            "--n",
            "20",
            "--m",
            "76",
            "--seed",
            "3",
            "-o",
            s(&a),
        ]);
        assert!(out.status.success());
        assert_eq!(fs::read_to_string(&a).unwrap().lines().count(), 76);
    }

    let zero = geodetic(&[
        "generate",
        "--family",
        "er",
        "--n",
        "10",
        "--density",
        "0",
        "--seed",
        "1",
        "-o",
        s(&a),
    ]);
    assert_eq!(zero.status.code(), Some(1));
    let sparse = geodetic(&["generate", "--family", "er", "--n", "10", "--m", "5", "-o", s(&a)]);
    assert_eq!(sparse.status.code(), Some(1));
}

#[test]
fn bench_csv_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = geodetic(&[
            "bench",
            "--scheme",
            "standard",
            "--families",
            "er,ba",
            "--max-n",
            "20",
            "--seed-base",
            "5",
            "--jobs",
            "2",
            "--no-timing",
            "-o",
            s(&path),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        fs::read_to_string(path).unwrap()
    };
    let first = run("a.csv");
    assert_eq!(first, run("b.csv"));
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 1 + 16);
    assert!(lines[0].starts_with("family,n,m,seed,exact_value"));
    assert!(lines[1].starts_with("er,10,9,5,"));
    // seeds count cells of the full grid, before the size filter
    assert!(lines[9].starts_with("ba,10,9,45,"));
}

#[test]
fn bench_pretty_and_timed_output() {
    let out = geodetic(&["bench", "--families", "ws", "--max-n", "10", "--pretty"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().next().unwrap().trim_start().starts_with("family"));

    let out = geodetic(&["bench", "--families", "ws", "--max-n", "10", "--exact-max-n", "0"]);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[4..7], &["", "", ""]);
    assert!(row[8].parse::<f64>().is_ok());
}
