use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cwbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwbound")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bound_json_reports_27_8_13() {
    let o = cwbound(&["bound", "--n", "27", "--d", "8", "--w", "13", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bound"], 11897);
}

#[test]
fn bound_with_certificate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("a.json");
    let o = cwbound(&[
        "bound", "--n", "27", "--d", "12", "--w", "12", "--families", "delsarte,t-cap,columns", "--k", "1,2,3",
        "--known-bound", "140", "--emit-certificate", path(&cert),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("139"));
    let v = cwbound(&["verify", path(&cert)]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("139"));

    let mut json: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let dual = json["lps"][0]["dual"].as_array_mut().unwrap();
    let idx = dual.iter().position(|x| x != "0").unwrap();
    dual[idx] = Value::String("12345/7".into());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&json).unwrap()).unwrap();
    let v = cwbound(&["verify", path(&bad)]);
    assert_ne!(v.status.code(), Some(0));
    let err = String::from_utf8_lossy(&v.stderr);
    assert!(err.contains("dual-feasibility") || err.contains("duality-gap") || err.contains("farkas"), "{err}");

    let text = std::fs::read_to_string(&cert).unwrap();
    let cut = dir.path().join("cut.json");
    std::fs::write(&cut, &text[..text.len() / 2]).unwrap();
    assert_eq!(cwbound(&["verify", path(&cut)]).status.code(), Some(2));
    assert_eq!(cwbound(&["verify", path(&dir.path().join("missing.json"))]).status.code(), Some(2));
}

#[test]
fn table_is_deterministic_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = |out: &Path, jobs: &str| {
        let o = cwbound(&["table", "--n", "8..12", "--d", "4,6", "--jobs", jobs, "--output", path(out)]);
        assert_eq!(o.status.code(), Some(0));
    };
    args(&a, "1");
    args(&b, "4");
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    let text = String::from_utf8(first).unwrap();
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("n,d,w,bound,method,error"));
    let keys: Vec<(u32, u32, u32)> = rows
        .map(|l| {
            let f: Vec<u32> = l.split(',').take(3).map(|x| x.parse().unwrap()).collect();
            (f[0], f[1], f[2])
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
    assert_eq!(keys.len(), (9 + 10 + 11 + 12 + 13) * 2);
}

#[test]
fn empty_table_and_failed_cells() {
    let o = cwbound(&["table", "--n", "9..8", "--d", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,d,w,bound,method,error\n");

    let o = cwbound(&["table", "--n", "6", "--d", "0..1", "--w", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("6,0,3,,failed,"));
    assert!(stdout(&o).contains("6,1,3,20,"));
}

#[test]
fn table_known_overrides_seed_descent() {
    let o = cwbound(&["table", "--n", "27", "--d", "12", "--w", "12", "--families", "delsarte,t-cap,columns", "--k", "1,2,3", "--known", "27,12,12=140"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("27,12,12,139,descent"), "{}", stdout(&o));
}

#[test]
fn oracle_json_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("code.txt");
    let o = cwbound(&["oracle", "--n", "8", "--d", "4", "--w", "3", "--check", "--format", "json", "--witness", path(&witness)]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 8);
    assert_eq!(v["lemma_violations"].as_array().unwrap().len(), 0);
    let code: cwbounds::oracle::ExplicitCode = std::fs::read_to_string(&witness).unwrap().parse().unwrap();
    assert_eq!(code.len(), 8);

    let o = cwbound(&["oracle", "--n", "6", "--d", "4", "--doubly", "1,3,1,3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,d,kind,mode,size\n6,4,\"doubly(1,3,1,3)\",exhaustive,3\n");

    let o = cwbound(&["oracle", "--n", "30", "--d", "4", "--w", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tcheck_reports_table_and_identity_values() {
    let o = cwbound(&["tcheck", "--w1", "2", "--n1", "13", "--w2", "3", "--n2", "14", "--d", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bound"], 26);

    let o = cwbound(&["tcheck", "--w1", "1", "--n1", "4", "--w2", "1", "--n2", "5", "--d", "6"]);
    assert!(stdout(&o).contains("<= 1"));

    let dir = tempfile::tempdir().unwrap();
    let extra = dir.path().join("t.csv");
    std::fs::write(&extra, "2,13,3,14,8,25,local\n").unwrap();
    let o = cwbound(&["tcheck", "--w1", "2", "--n1", "13", "--w2", "3", "--n2", "14", "--d", "8", "--tbounds", path(&extra)]);
    assert!(stdout(&o).contains("<= 25"));
    std::fs::write(&extra, "2,13,3,14\n").unwrap();
    let o = cwbound(&["tcheck", "--w1", "2", "--n1", "13", "--w2", "3", "--n2", "14", "--d", "8", "--tbounds", path(&extra)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cwbound(&["bound", "--n", "8"]).status.code(), Some(1));
    assert_eq!(cwbound(&["bound", "--n", "8", "--d", "4", "--w", "9"]).status.code(), Some(1));
    assert_eq!(cwbound(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cwbound(&["--help"]).status.code(), Some(0));
}
