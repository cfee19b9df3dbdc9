use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nuplus"))
        .args(args)
        .output()
        .expect("run nuplus")
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.push("--json");
    let out = run(&args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn json_schema_is_stable() {
    for args in [
        &["lens-d", "5", "3"][..],
        &["surgery-d", "15", "1", "--i", "4", "--knot", "torus(3,5)"],
        &["torus-v", "3", "5"],
        &["cable", "2", "7", "--knot", "torus(2,3)"],
        &["nu-plus", "--knot", "unknot"],
        &["tables"],
        &["verify", "--max-p", "3"],
    ] {
        let v = json(args);
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(
            keys,
            ["command", "inputs", "results", "regime", "warnings"],
            "{args:?}"
        );
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn lens_values() {
    let v = json(&["lens-d", "15", "1", "--i", "0"]);
    assert_eq!(v["results"]["d"], "7/2");
    let v = json(&["lens-d", "3", "5", "--all"]);
    assert_eq!(v["results"]["d"], serde_json::json!(["1/6", "1/6", "-1/2"]));
    let v = json(&["lens-d", "5", "3", "--i", "-4"]);
    assert_eq!(v["results"]["d"], "0");
}

#[test]
fn surgery_and_sequences() {
    let v = json(&["surgery-d", "15", "1", "--i", "4", "--knot", "torus(3,5)"]);
    assert_eq!(v["results"]["d"], "17/30");
    let v = json(&["surgery-d", "1", "1", "--i", "0", "--knot", "v[1,0]"]);
    assert_eq!(v["results"]["d"], "-2");
    let v = json(&["torus-v", "3", "5"]);
    assert_eq!(v["results"]["v"], "2,1,1,1,0");
    assert_eq!(v["results"]["nu_plus"], 4);
}

#[test]
fn cable_reports_regime() {
    let v = json(&["cable", "2", "7", "--knot", "torus(2,3)"]);
    assert_eq!(v["results"]["nu_plus"], 5);
    assert_eq!(v["results"]["formula"], 5);
    assert_eq!(v["regime"], "proof-backed");

    let v = json(&["cable", "2", "5", "--nu", "2", "--g4", "2"]);
    assert_eq!(v["results"]["formula"], 6);
    assert_eq!(v["results"]["g4_upper_bound"], 6);
    assert_eq!(v["regime"], "stated-proof-gap");
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);

    let v = json(&["cable", "2", "3", "--nu", "2"]);
    assert_eq!(v["results"]["lower_bound"], 3);
    assert!(v["results"].get("formula").is_none());
    assert_eq!(v["regime"], "lower-bound-only");
}

#[test]
fn nu_plus_of_expressions() {
    let v = json(&["nu-plus", "--knot", "cable(2,7; torus(2,3))"]);
    assert_eq!(v["results"]["nu_plus"], 5);
    assert_eq!(v["results"]["complete"], true);
    assert_eq!(v["results"]["levels"].as_array().unwrap().len(), 2);

    let v = json(&["nu-plus", "--knot", "cable(2,5; v[1,1,0])"]);
    assert_eq!(v["results"]["nu_plus"]["at_least"], 6);
    assert_eq!(v["results"]["complete"], false);
}

#[test]
fn csv_mirrors_exact_strings() {
    let out = run(&["lens-d", "15", "1", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("key,value"));
    let row = lines.next().unwrap();
    assert!(
        row.starts_with("d,7/2,77/30,53/30,11/10,17/30,1/6,-1/10,"),
        "{row}"
    );
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["tables"]), Some(0));
    assert_eq!(code(&["lens-d", "4", "2"]), Some(1));
    assert_eq!(code(&["lens-d", "-3", "2"]), Some(1));
    assert_eq!(code(&["nu-plus", "--knot", "cable(2,4; unknot)"]), Some(1));
    assert_eq!(code(&["nu-plus", "--knot", "torus(3,"]), Some(2));
    assert_eq!(
        code(&["surgery-d", "5", "3", "--i", "7", "--knot", "unknot"]),
        Some(1)
    );
    assert_eq!(code(&["verify", "--max-p", "1"]), Some(1));
    assert_eq!(code(&["bogus"]), Some(2));
    assert_eq!(code(&["verify", "--max-p", "2"]), Some(0));
}

#[test]
fn parse_errors_report_offsets() {
    let out = run(&["nu-plus", "--knot", "cable(2,7, unknot)"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("offset 9"), "{err}");
}
