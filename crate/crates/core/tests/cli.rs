use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn heis(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heis"))
        .args(args)
        .env("HEIS_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch() -> (tempfile::TempDir, std::path::PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.tsv");
    (dir, cache)
}

#[test]
fn coeff_reference_values() {
    let (_dir, cache) = scratch();
    for (args, value) in [
        (["coeff", "heis", "1", "1", "1"], 1),
        (["coeff", "lr", "2,2,1", "2,1", "2"], 1),
        (["coeff", "kron", "3", "2,1", "2,1"], 1),
        (["coeff", "heis", "3,1", "2,1", "1,1"], 3),
    ] {
        let v = json(&heis(&cache, &args));
        assert_eq!(v["value"], value, "{args:?}");
        assert_eq!(v["engine"], "primary");
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["elapsed_ms", "engine", "kind", "lambda", "mu", "nu", "value"]);
    }
}

#[test]
fn coeff_with_oracle_and_cache_round_trip() {
    let (_dir, cache) = scratch();
    let args = ["coeff", "heis", "3,2,1", "2,1", "2,1", "--oracle"];
    let first = json(&heis(&cache, &args));
    assert_eq!(first["engine"], "primary+oracle");
    let text = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(text.lines().count(), 2);
    let second = json(&heis(&cache, &args));
    assert_eq!(first["value"], second["value"]);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), text);

    let uncached = json(&heis(&cache, &["coeff", "lr", "2,1", "1,1", "1", "--no-cache"]));
    assert_eq!(uncached["value"], 1);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), text);
}

#[test]
fn corrupt_cache_warns_and_conflicts_fail() {
    let (_dir, cache) = scratch();
    std::fs::write(&cache, "not a record\nkron\t3\t2,1\t2,1\toracle\t9\n").unwrap();
    let out = heis(&cache, &["coeff", "lr", "2,1", "1,1", "1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed"));

    let out = heis(&cache, &["coeff", "kron", "3", "2,1", "2,1"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
}

#[test]
fn exit_codes() {
    let (_dir, cache) = scratch();
    assert_eq!(heis(&cache, &["coeff", "kron", "3,x", "2", "1"]).status.code(), Some(2));
    assert_eq!(
        heis(&cache, &["coeff", "kron", "1,2", "2,1", "2,1"]).status.code(),
        Some(2)
    );
    assert_eq!(heis(&cache, &["coeff", "kron", "3", "2", "1"]).status.code(), Some(3));
    assert_eq!(heis(&cache, &["coeff", "heis", "5", "1", "1"]).status.code(), Some(3));
    assert_eq!(
        heis(&cache, &["seq", "lr", "--base", "1", "1", "1", "--dir", "1", "1", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(heis(&cache, &["bogus"]).status.code(), Some(2));
}

#[test]
fn seq_reports_constant_tails() {
    let (_dir, cache) = scratch();
    let v = json(&heis(
        &cache,
        &["seq", "kron", "--base", "2", "1,1", "1,1", "--dir", "1", "1", "1"],
    ));
    assert_eq!(v["verdict"], "constant_tail");
    assert_eq!(v["sequence"].as_array().unwrap().len(), 11);
    assert_eq!(v["limit"], 1);

    let v = json(&heis(
        &cache,
        &[
            "seq", "lr", "--base", "2", "1,1", "0", "--dir", "1", "1", "0", "--n", "6",
        ],
    ));
    assert_eq!(v["verdict"], "constant_tail");
    assert_eq!(v["limit"], 0);

    let v = json(&heis(
        &cache,
        &[
            "seq", "heis", "--base", "3,1", "2,1", "2", "--dir", "1", "1", "1", "--n", "2",
        ],
    ));
    assert_eq!(v["verdict"], "no_tail_detected");
    assert!(v["limit"].is_null());
}

#[test]
fn stable_verdicts() {
    let (_dir, cache) = scratch();
    let v = json(&heis(&cache, &["stable", "1", "1", "1", "--n-max", "4"]));
    assert_eq!(v["verdict"], "inconclusive_up_to");
    assert_eq!(v["n_max"], 4);
    let v = json(&heis(&cache, &["stable", "3,2,1", "3,2,1", "3,2,1"]));
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(v["value"], 5);
    let v = json(&heis(&cache, &["stable", "2,1", "1", "1,1"]));
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["basis"], "single_lr_coefficient");
}

#[test]
fn additive_matrix_files() {
    let (dir, cache) = scratch();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let worked = write("worked.txt", "0 4 6 1\n4 5 7 2\n2 3 5 0\n");
    let v = json(&heis(&cache, &["additive", "--matrix", &worked, "--kind", "h"]));
    assert_eq!(v["additive"], true);
    assert_eq!(
        v["triple"],
        serde_json::json!([[7, 6, 5, 5, 4, 4, 3, 2, 2, 1], [18, 10], [12, 18, 3]])
    );
    assert_eq!(v["certificate"]["x"][0], "0");

    let identity = write("identity.txt", "0 1 0\n1 1 0\n0 0 1\n");
    let v = json(&heis(&cache, &["additive", "--matrix", &identity, "--kind", "h"]));
    assert_eq!(v["additive"], false);
    assert!(v.get("triple").is_none());

    let corner = write("corner.txt", "1 1\n1 0\n");
    assert_eq!(
        heis(&cache, &["additive", "--matrix", &corner, "--kind", "h"])
            .status
            .code(),
        Some(2)
    );

    let k = write("k.txt", "1 0\n2 1\n");
    let v = json(&heis(&cache, &["additive", "--matrix", &k, "--kind", "k"]));
    assert_eq!(v["additive"], true);
    assert_eq!(v["triple"], serde_json::json!([[2, 1, 1], [1, 3], [3, 1]]));

    let missing = dir.path().join("missing.txt");
    assert_eq!(
        heis(
            &cache,
            &["additive", "--matrix", missing.to_str().unwrap(), "--kind", "k"]
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn enumerate_counts_and_budget() {
    let (_dir, cache) = scratch();
    let count = |args: &[&str]| {
        let out = heis(&cache, args);
        assert!(out.status.success());
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .last()
            .unwrap()
            .to_string()
    };
    assert_eq!(
        count(&["enumerate", "--rows", "1,1", "--cols", "1,1", "--kind", "k"]),
        "count 2"
    );
    assert_eq!(
        count(&["enumerate", "--rows", "1", "--cols", "1", "--kind", "h"]),
        "count 2"
    );
    assert_eq!(
        count(&[
            "enumerate",
            "--rows",
            "2,1",
            "--cols",
            "2,1",
            "--kind",
            "h",
            "--pi",
            "1,1,1,1"
        ]),
        "count 4"
    );
    let out = heis(&cache, &["enumerate", "--rows", "9,9", "--cols", "9,9", "--kind", "h"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refusing"));
    let out = heis(
        &cache,
        &[
            "enumerate",
            "--rows",
            "9,9",
            "--cols",
            "9,9",
            "--kind",
            "h",
            "--max-entry-sum",
            "36",
        ],
    );
    assert!(out.status.success());
}

#[test]
fn selftest_passes() {
    let (_dir, cache) = scratch();
    let out = heis(&cache, &["selftest"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.trim_end().ends_with("passed"));
}
