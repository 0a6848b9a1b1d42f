use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dynspan(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dynspan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn dynspan");
    {
        let mut pipe = child.stdin.take().expect("stdin");
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).expect("write stdin");
        }
    }
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn builtin(args: &[&str]) -> String {
    let mut full = vec!["builtin"];
    full.extend_from_slice(args);
    let o = dynspan(&full, None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn analyze_json(doc: &str) -> Value {
    let o = dynspan(&["analyze", "--output", "json"], Some(doc));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn builtin_documents() {
    let doc: Value = serde_json::from_str(&builtin(&["multiset", "--n", "3", "--k", "3"])).unwrap();
    assert_eq!(doc["period"], 3);
    assert_eq!(doc["perm"].as_array().unwrap().len(), 10);
    let doc: Value = serde_json::from_str(&builtin(&["negation"])).unwrap();
    assert_eq!(doc["perm"].as_array().unwrap().len(), 2);

    let o = dynspan(&["builtin", "multiset", "--n", "1", "--k", "2"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_multiset_2_3() {
    let r = analyze_json(&builtin(&["multiset", "--n", "2", "--k", "3"]));
    assert_eq!(r["dim_V"], 4);
    let spectrum = r["spectrum"].as_array().unwrap();
    assert_eq!(spectrum[0]["exponent"], 0);
    assert_eq!(spectrum[0]["root_order"], 1);
    assert_eq!(spectrum[0]["multiplicity"], 2);
    assert_eq!(spectrum[1]["exponent"], 1);
    assert_eq!(spectrum[1]["root_order"], 2);
    assert_eq!(spectrum[1]["multiplicity"], 2);
    let total: u64 = spectrum.iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum();
    assert_eq!(r["dim_V"].as_u64().unwrap(), total);
}

#[test]
fn analyze_chain_3_3_homomesies() {
    let r = analyze_json(&builtin(&["chain", "--n", "3", "--k", "3"]));
    let cs: Vec<&str> = r["homomesies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["c"].as_str().unwrap())
        .collect();
    assert_eq!(cs, ["1/2", "1", "3/2"]);
}

#[test]
fn round_trip_every_family() {
    let cases: &[&[&str]] = &[
        &["multiset", "--n", "4", "--k", "3"],
        &["chain", "--n", "4", "--k", "3"],
        &["distinct", "--n", "5", "--k", "2"],
        &["negation"],
    ];
    for args in cases {
        let doc = builtin(args);
        for method in ["galois", "cyclotomic", "both"] {
            let o = dynspan(&["analyze", "--method", method], Some(&doc));
            assert_eq!(o.status.code(), Some(0), "{args:?} {method}");
        }
        let ext = dynspan(&["extend-products"], Some(&doc));
        assert_eq!(ext.status.code(), Some(0));
        let again = dynspan(&["spectrum", "--output", "json"], Some(&stdout(&ext)));
        assert_eq!(again.status.code(), Some(0));
    }
}

#[test]
fn reports_are_deterministic() {
    let doc = builtin(&["multiset", "--n", "4", "--k", "3"]);
    let a = dynspan(&["analyze", "--output", "json"], Some(&doc));
    let b = dynspan(&["analyze", "--output", "json"], Some(&doc));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reads_from_a_file() {
    let path = std::env::temp_dir().join(format!("dynspan-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, builtin(&["negation"])).unwrap();
    let o = dynspan(&["invariants", "--output", "json", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    let basis: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(basis, serde_json::json!([]));
}

#[test]
fn malformed_documents_exit_2() {
    let bad_row = r#"{"period": 2, "perm": [1, 0], "stats": [[1, 2], [3]]}"#;
    let o = dynspan(&["analyze"], Some(bad_row));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("row 1"));

    let not_periodic = r#"{"period": 2, "perm": [1, 2, 0], "stats": [[1], [2], [3]]}"#;
    let o = dynspan(&["spectrum"], Some(not_periodic));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("T^n ≠ Id"));

    let bad_rational = r#"{"period": 2, "perm": [1, 0], "stats": [["1/0"], [1]]}"#;
    assert_eq!(dynspan(&["analyze"], Some(bad_rational)).status.code(), Some(2));
    assert_eq!(dynspan(&["analyze"], Some("not json")).status.code(), Some(2));
    assert_eq!(dynspan(&["no-such-command"], None).status.code(), Some(2));
}

#[test]
fn homomesies_listing() {
    let o = dynspan(&["homomesies", "--output", "json"], Some(&builtin(&["negation"])));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["homomesies"][0]["verdict"], "mesic");
    assert_eq!(v["homomesies"][0]["c"], "0");
    assert_eq!(v["zero_mesic_combinations"], serde_json::json!([["1"]]));
}

#[test]
fn lyness_vectors() {
    let o = dynspan(&["lyness", "--output", "json", "[1,0,0,0,0]"], None);
    assert_eq!(stdout(&o).trim(), "[0,1,0,0,0]");
    let o = dynspan(&["lyness", "--output", "json"], Some("[0, 0, 0, 1, 0]"));
    assert_eq!(stdout(&o).trim(), "[-1,0,0,0,1]");
    let o = dynspan(&["lyness"], Some("[-2, 0, 1, 0, 0]"));
    assert!(stdout(&o).contains("0-mesic:   true"));
    assert_eq!(dynspan(&["lyness"], Some("[1, 2]")).status.code(), Some(2));
}

#[test]
fn verify_single_checks() {
    let o = dynspan(&["verify-paper", "--only", "lyness"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));

    let o = dynspan(&["verify-paper", "--only", "lyness", "--perturb-lyness"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("M^5 != I"));

    let o = dynspan(&["verify-paper", "--only", "lift", "--output", "json"], None);
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 1);
    assert_eq!(rows[0]["passed"], true);

    assert_eq!(dynspan(&["verify-paper", "--only", "nope"], None).status.code(), Some(2));
}
