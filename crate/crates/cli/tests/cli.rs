//! End-to-end runs of the compiled binary: formats, exit codes, and
//! byte-determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_species-cli"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn ktrees_plain_output() {
    let out = run(&["ktrees", "--k", "2", "--n", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().last(), Some("6 39"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn bpblocks_csv_output() {
    let out = run(&["bpblocks", "--n", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,count"));
    assert_eq!(text.lines().last(), Some("6,5"));
}

#[test]
fn species_json_output() {
    let out = run(&["species", "--name", "Omega", "--degree", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "species");
    assert_eq!(doc["params"]["degree"], 2);
    let results = doc["results"].as_array().unwrap();
    let rows: Vec<(String, String)> = results
        .iter()
        .map(|r| {
            (
                r["monomial"].as_str().unwrap().to_string(),
                r["coeff"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            ("p1".to_string(), "1".to_string()),
            ("p1^2".to_string(), "-1/2".to_string()),
            ("p2".to_string(), "-1/2".to_string()),
        ]
    );
}

#[test]
fn species_gamma_components_are_labeled() {
    let out = run(&["species", "--name", "BC", "--degree", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("component,monomial,coefficient\n"));
    assert!(text.contains("e,p1,2"));
    assert!(text.contains("tau,p2,2"));
}

#[test]
fn counts_exceeding_u64_render_as_decimal_strings() {
    let out = run(&["ktrees", "--k", "3", "--n", "30", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results[30]["count"], "10221394007530945428347");
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["ktrees", "--k", "2", "--n", "8", "--format", "json"],
        vec!["species", "--name", "CBP", "--degree", "5", "--format", "csv"],
        vec!["bpblocks", "--n", "5"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn usage_errors_exit_1() {
    let unknown_flag = run(&["ktrees", "--k", "2", "--n", "3", "--bogus"]);
    assert_eq!(unknown_flag.status.code(), Some(1));

    let bad_value = run(&["ktrees", "--k", "0", "--n", "3"]);
    assert_eq!(bad_value.status.code(), Some(1));

    let missing = run(&["bpblocks"]);
    assert_eq!(missing.status.code(), Some(1));

    let bad_species = run(&["species", "--name", "XYZ", "--degree", "3"]);
    assert_eq!(bad_species.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_identities_suite_passes() {
    let out = run(&["verify", "--suite", "identities"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
    assert!(text.lines().count() >= 8);
}
