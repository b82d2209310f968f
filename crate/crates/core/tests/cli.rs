use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar-count"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_prints_record() {
    let out = run(&["compute", "--d", "3", "--r", "11", "--s", "0", "--theta", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "d,r,s,theta,count\n3,11,0,0,12960\n");

    let out = run(&["compute", "--d", "1", "--r", "2", "--s", "0", "--theta", "3"]);
    assert!(stdout(&out).ends_with("1,2,0,3,1\n"));
}

#[test]
fn off_shell_compute_is_zero() {
    let out = run(&["compute", "--d", "3", "--r", "10", "--s", "0", "--theta", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("3,10,0,0,0\n"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["compute", "--d", "0", "--r", "1", "--s", "0", "--theta", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--d"));

    let out = run(&["compute", "--d", "2", "--r", "-1", "--s", "0", "--theta", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--r"));

    assert_eq!(run(&["verify", "--max-d", "1"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--max-d", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--max-d", "2", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn table_degree_two_block() {
    let out = run(&["table", "--max-d", "2", "--format", "csv"]);
    let text = stdout(&out);
    for row in ["2,8,0,0,92", "2,6,1,0,18", "2,7,0,1,34", "2,5,0,3,1", "2,1,3,1,0"] {
        assert!(text.lines().any(|l| l == row), "missing {row}");
    }
    assert_eq!(text.lines().count(), 1 + 10 + 15);
}

#[test]
fn csv_and_json_agree() {
    let csv_text = stdout(&run(&["table", "--max-d", "4", "--format", "csv"]));
    let json_text = stdout(&run(&["table", "--max-d", "4", "--format", "json"]));
    let from_csv: BTreeSet<String> = csv_text.lines().skip(1).map(str::to_string).collect();
    let json: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    let from_json: BTreeSet<String> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            format!(
                "{},{},{},{},{}",
                o["d"], o["r"], o["s"], o["theta"],
                o["count"].as_str().expect("count is a string")
            )
        })
        .collect();
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv.len(), csv_text.lines().count() - 1);
}

#[test]
fn warm_cache_gives_identical_table() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.txt");
    let cache = cache.to_str().unwrap();
    let cold = run(&["table", "--max-d", "5", "--cache", cache]);
    assert!(cold.status.success());
    let saved = fs::read_to_string(cache).unwrap();
    assert!(saved.lines().any(|l| l == "5,17,0,0=1979329280"));
    let mut sorted: Vec<_> = saved.lines().collect();
    sorted.sort_by_key(|l| {
        let key = l.split('=').next().unwrap();
        key.split(',').map(|f| f.parse::<u32>().unwrap()).collect::<Vec<_>>()
    });
    assert_eq!(sorted, saved.lines().collect::<Vec<_>>());

    let warm = run(&["table", "--max-d", "5", "--cache", cache]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(fs::read_to_string(cache).unwrap(), saved);
}

#[test]
fn corrupted_cache_names_key() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.txt");
    fs::write(&path, "2,8,0,0=92\n3,11,0,0=12961\n").unwrap();
    let out = run(&["compute", "--d", "3", "--r", "11", "--s", "0", "--theta", "0", "--cache", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3,11,0,0"));
}

#[test]
fn unreadable_cache_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    // a directory cannot be read as a cache file
    let out = run(&["verify", "--max-d", "2", "--cache", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn empty_cache_file_loads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.txt");
    fs::write(&path, "").unwrap();
    let out = run(&["compute", "--d", "2", "--r", "8", "--s", "0", "--theta", "0", "--cache", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&path).unwrap(), "2,8,0,0=92\n");
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify"]);
    let b = run(&["verify"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("all 5 checks passed"));
}
