use std::process::{Command, Output};

use serde_json::Value;

fn burnside(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnside"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = burnside(&all);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stderr)));
    (v, o.status.code().unwrap())
}

#[test]
fn mgn_s5_over_a5_is_zero() {
    let o = burnside(&["mgn", "--group", "S5", "--normal", "A5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("0/1"));
}

#[test]
fn mgn_c3_is_two_thirds() {
    let o = burnside(&["mgn", "--group", "C3", "--normal", "C3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2/3");
}

#[test]
fn theorem_check_on_s4() {
    let (v, code) = json(&["verify-theorem13", "--group", "S4", "--normal", "A4"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "verify-theorem13");
    assert_eq!(v["group"]["order"], 24);
    let pairs = v["result"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    assert_eq!(pairs[0]["mDirect"]["num"], "0");
    assert_eq!(pairs[0]["mViaEuler"]["num"], "0");
    assert!(v["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|a| a["holds"] == true));
    assert_eq!(v["timing_ms"], Value::Null);
}

#[test]
fn theorem_check_over_all_pairs() {
    // D4 has three normal subgroups of index 2
    let (v, code) = json(&["verify-theorem13", "--group", "D4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn envelope_shape() {
    let (v, code) = json(&["lattice", "--group", "S3"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["assertions", "command", "group", "result", "timing_ms"]
    );
    assert_eq!(v["group"]["name"], "S3");
    assert_eq!(v["result"]["subgroups"].as_array().unwrap().len(), 6);

    let (v, _) = json(&["moebius", "--group", "S3", "--timing"]);
    assert!(v["timing_ms"].is_u64());
    assert_eq!(v["result"]["muTrivialTop"], 3);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "mgn-euler",
        "--group",
        "S4",
        "--normal",
        "An",
        "--homology",
        "--format",
        "json",
    ];
    assert_eq!(burnside(&args).stdout, burnside(&args).stdout);
}

#[test]
fn class_poset_of_s3() {
    let (v, code) = json(&[
        "class-poset",
        "--group",
        "S3",
        "--normal",
        "A3",
        "--cyclic",
        "1",
        "--homology",
    ]);
    assert_eq!(code, 0);
    let s = &v["result"]["summary"];
    assert_eq!(s["connected"], false);
    assert_eq!(s["euler"], 3);
    assert_eq!(s["bettiNumbers"], serde_json::json!([3]));
}

#[test]
fn five_cycle_poset_in_s5() {
    let (v, code) = json(&[
        "class-poset",
        "--group",
        "S5",
        "--normal",
        "An",
        "--cyclic",
        "(12345)",
    ]);
    assert_eq!(code, 0);
    let members = v["result"]["members"].as_array().unwrap();
    assert_eq!(members.len(), 1);
    assert_eq!(members[0]["order"], 20);
}

#[test]
fn beta_and_bgroup() {
    let (v, code) = json(&["beta", "--group", "C6"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["quotient"]["isomorphicTo"], "C1");
    let (v, _) = json(&["beta", "--group", "S4"]);
    assert_eq!(v["result"]["quotient"]["isomorphicTo"], "S4");
    let (v, code) = json(&["bgroup", "--group", "A5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["isBGroup"], true);
    let (v, _) = json(&["bgroup", "--group", "C3"]);
    assert_eq!(v["result"]["isBGroup"], false);
}

#[test]
fn verify_s5_reports_connectivity() {
    let o = burnside(&["verify-s5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: m(S5, A5) = 0"));
}

#[test]
fn verify_s5_with_homology_reports_the_trivial_base() {
    let (v, code) = json(&["verify-s5", "--homology"]);
    assert_eq!(code, 1);
    let failed: Vec<&Value> = v["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["holds"] == false)
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["detail"], "betti [1, 24, 24, 0]");
}

#[test]
fn usage_and_resource_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &["mgn", "--group", "S4"],
        &["mgn", "--group", "S4", "--normal", "S3"],
        &["mgn", "--group", "Q9", "--normal", "1"],
        &["lattice", "--group", "S5", "--lattice-limit", "100"],
        &["lattice", "--group", "S6", "--closure-limit", "500"],
        &["mgn-euler", "--group", "C4", "--normal", "C2"],
        &[
            "class-poset",
            "--group",
            "S4",
            "--normal",
            "An",
            "--cyclic",
            "(12)",
        ],
        &[
            "mgn-euler",
            "--group",
            "S5",
            "--normal",
            "An",
            "--chain-limit",
            "10",
        ],
    ];
    for args in cases {
        let o = burnside(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}
