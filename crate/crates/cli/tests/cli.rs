use std::path::Path;
use std::process::{Command, Output};

use graded_core::oracle::CensusTable;

fn graded(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graded"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(out: &Output) -> Vec<String> {
    stdout(out)
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn graded_semiorders_by_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(
        dir.path(),
        &[
            "count",
            "--family",
            "graded_semiorder",
            "--kind",
            "unlabeled_ogf",
            "--method",
            "closed_form",
            "--n-max",
            "7",
        ],
    );
    assert!(out.status.success());
    assert_eq!(column(&out), ["1", "1", "2", "4", "9", "22", "56", "145"]);
}

#[test]
fn graded_interval_orders_by_transfer() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(
        dir.path(),
        &[
            "count",
            "--family",
            "graded_interval",
            "--kind",
            "labeled_egf",
            "--method",
            "transfer",
            "--n-max",
            "6",
        ],
    );
    assert!(out.status.success());
    assert_eq!(column(&out), ["1", "1", "3", "13", "99", "1021", "13443"]);
}

#[test]
fn unsupported_method_is_a_configuration_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(
        dir.path(),
        &[
            "count",
            "--family",
            "all_graded",
            "--kind",
            "unlabeled_ogf",
            "--method",
            "closed_form",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not available"));
}

#[test]
fn oracle_limit_is_a_configuration_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(
        dir.path(),
        &[
            "count",
            "--family",
            "graded",
            "--kind",
            "labeled_egf",
            "--method",
            "oracle",
            "--n-max",
            "9",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bfile_output() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "bfile",
        "--family",
        "graded_semiorder",
        "--kind",
        "unlabeled_ogf",
        "--method",
        "transfer",
    ];
    let out = graded(dir.path(), &[&args[..], &["--n-max", "5"]].concat());
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("0 1\n1 1\n2 2\n3 4\n"));

    let out = graded(
        dir.path(),
        &[&args[..], &["--n-min", "2", "--n-max", "4", "--offset", "1"]].concat(),
    );
    assert_eq!(stdout(&out), "1 2\n2 4\n3 9\n");

    let out = graded(dir.path(), &[&args[..], &["--n-min", "6", "--n-max", "3"]].concat());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn crosscheck_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(
        dir.path(),
        &[
            "crosscheck",
            "--family",
            "graded_interval",
            "--family",
            "interval_order",
            "--n-max",
            "6",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("0 mismatch(es)\n"));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(dir.path(), &["cache", "rebuild", "--n-max", "5"]);
    assert!(out.status.success());
    let table = CensusTable::load(&dir.path().join("census.txt")).unwrap();
    assert_eq!(table.n_max, 5);

    let out = graded(dir.path(), &["cache", "inspect"]);
    assert!(stdout(&out).contains("n_max 5"));

    let out = graded(dir.path(), &["cache", "inspect", "--format", "json"]);
    assert!(out.status.success());
    let json_path = dir.path().join("copy.json");
    std::fs::write(&json_path, out.stdout).unwrap();
    assert_eq!(CensusTable::load(&json_path).unwrap(), table);

    let out = graded(
        dir.path(),
        &[
            "count",
            "--family",
            "semiorder",
            "--kind",
            "labeled_egf",
            "--method",
            "oracle",
            "--n-max",
            "5",
        ],
    );
    assert_eq!(column(&out), ["1", "1", "3", "19", "183", "2371"]);
}

#[test]
fn json_counts_keep_big_values_exact() {
    let dir = tempfile::tempdir().unwrap();
    let out = graded(
        dir.path(),
        &[
            "count",
            "--family",
            "graded",
            "--kind",
            "labeled_egf",
            "--method",
            "transfer",
            "--n-max",
            "25",
            "--format",
            "json",
        ],
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["values"].as_array().unwrap().len(), 26);
    let line = text.lines().find(|l| l.trim().starts_with("1381")).unwrap();
    assert_eq!(line.trim(), "1381,");
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("graded.toml");
    std::fs::write(
        &config,
        "family = \"semiorder\"\nkind = \"unlabeled_ogf\"\nmethod = \"closed_form\"\nn_max = 4\n",
    )
    .unwrap();
    let out = graded(dir.path(), &["--config", config.to_str().unwrap(), "count"]);
    assert_eq!(column(&out), ["1", "1", "2", "5", "14"]);

    std::fs::write(&config, "colour = \"blue\"\n").unwrap();
    let out = graded(dir.path(), &["--config", config.to_str().unwrap(), "count"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_a_poset_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("n.poset");
    std::fs::write(&file, "4\n0 < 2\n1 < 2\n1 < 3\n").unwrap();
    let out = graded(dir.path(), &["classify", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("grading strong"), "{text}");
    assert!(text.contains("interval_order"));
    assert!(text.contains("automorphisms 1"));
}
