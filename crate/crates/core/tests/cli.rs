//! End-to-end runs of the `dunkl` binary and the export files.

use std::fs;
use std::path::Path;
use std::process::Command;

use dunkl_core::algebra::{Blade, ParameterSet, SpinorPolynomial};
use dunkl_core::runner::{basis_file, export_basis, export_connection, export_ladder};

const MU: &str = "1/2,1/3,1/4";

fn dunkl(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl")).args(args).output().unwrap()
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), fs::read(e.path()).unwrap())
        })
        .collect();
    out.sort();
    out
}

fn params() -> ParameterSet {
    ParameterSet::from_strs(&["1/2", "1/3", "1/4"]).unwrap()
}

#[test]
fn basis_file_matches_golden() {
    let golden = include_str!("golden/basis_n3_k1_sunit.txt");
    assert_eq!(basis_file(&params(), 1, Blade::UNIT, false).unwrap(), golden);
}

#[test]
fn basis_export_counts_and_parses() {
    let dir = tempfile::tempdir().unwrap();
    let paths = export_basis(&params(), 2, false, dir.path()).unwrap();
    // three degrees times eight blades
    assert_eq!(paths.len(), 24);
    let text = fs::read_to_string(dir.path().join("basis_n3_k2_s1_3.txt")).unwrap();
    let sections: Vec<&str> = text.split("# j = ").skip(1).collect();
    assert_eq!(sections.len(), 3);
    for sec in sections {
        let body: String = sec.lines().skip(1).map(|l| format!("{l}\n")).collect();
        let p = SpinorPolynomial::parse_canonical(3, &body).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.to_canonical_string(), body.trim_end_matches('\n').to_string() + "\n");
    }
}

#[test]
fn connection_export_k0_is_unit() {
    let dir = tempfile::tempdir().unwrap();
    export_connection(&params(), 0, dir.path()).unwrap();
    let main = fs::read_to_string(dir.path().join("connection_n3_k0.csv")).unwrap();
    assert_eq!(main, "j_row,j_col,numerator,denominator\n0 0,0 0,1,1\n");
    let gram = fs::read_to_string(dir.path().join("connection_n3_k0_gram.csv")).unwrap();
    assert_eq!(gram.lines().count(), 2);
}

#[test]
fn ladder_export_shape() {
    let dir = tempfile::tempdir().unwrap();
    export_ladder(&params(), 2, dir.path()).unwrap();
    let text = fs::read_to_string(dir.path().join("ladder_n3_k2.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("ell,sign,j_from,j_to,coeff_num,coeff_den"));
    // K1+ and K1- on three labels, one target each
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.split(',').count() == 6));
}

#[test]
fn exports_are_byte_stable() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [a.path(), b.path()] {
        for cmd in ["basis", "ladder", "connection"] {
            let out = dunkl(&[cmd, "--n", "3", "--k-max", "2", "--mu", "random:4", "--out", dir.to_str().unwrap()]);
            assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        }
    }
    let (x, y) = (read_dir_sorted(a.path()), read_dir_sorted(b.path()));
    assert!(!x.is_empty());
    assert_eq!(x, y);
}

#[test]
fn verify_exit_codes_and_reports() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = |dir: &Path, jobs: &str| {
        dunkl(&[
            "verify", "--n", "3", "--k-max", "2", "--mu", MU, "--suite", "osp,bi,casimir,scalar", "--jobs", jobs, "--out",
            dir.to_str().unwrap(),
        ])
    };
    let ra = args(a.path(), "1");
    let rb = args(b.path(), "3");
    assert_eq!(ra.status.code(), Some(0), "{}", String::from_utf8_lossy(&ra.stderr));
    assert_eq!(rb.status.code(), Some(0));
    let ja = fs::read(a.path().join("report.json")).unwrap();
    assert_eq!(ja, fs::read(b.path().join("report.json")).unwrap());
    assert!(a.path().join("timings.json").exists());
    let doc: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["summary"]["failed"], 0);
    assert!(doc.get("timings").is_none());

    let bad = dunkl(&["verify", "--n", "3", "--k-max", "1", "--mu", MU, "--suite", "bi", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    let failing: Vec<&serde_json::Value> = doc["rows"].as_array().unwrap().iter().filter(|r| r["status"] == "fail").collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|r| r["witness"]["input"].as_str().is_some_and(|s| !s.is_empty())));
}

#[test]
fn invalid_input_is_a_usage_error() {
    for args in [
        vec!["verify", "--n", "2"],
        vec!["verify", "--mu", "1/2,0,1"],
        vec!["verify", "--suite", "nope"],
        vec!["basis", "--mu", "1/2,1/3"],
    ] {
        let out = dunkl(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
}
