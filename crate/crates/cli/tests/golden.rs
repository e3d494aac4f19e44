mod common;

use common::{check_goldens, check_round_trip, invoke};

#[test]
fn outputs_match_golden_files() {
    let problems = check_goldens();
    assert!(problems.is_empty(), "{problems:#?}");
}

#[test]
fn json_round_trips_byte_for_byte() {
    let problems = check_round_trip();
    assert!(problems.is_empty(), "{problems:#?}");
}

#[test]
fn json_envelope_fields() {
    let o = invoke(&["lr", "--lambda", "1", "--mu", "1", "--nu", "1,1"], "json");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "result"]);
    assert_eq!(v["command"], "lr");
    assert_eq!(v["result"], 1);
}

#[test]
fn usage_errors_go_to_stderr() {
    let o = invoke(&["tabloids"], "text");
    assert_eq!(o.code, 1);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("--shape"));
    let o = invoke(
        &[
            "coeff", "--level", "2", "--rank", "2", "--lambda", "1", "--mu", "1", "--nu", "2",
            "--method", "best",
        ],
        "text",
    );
    assert_eq!(o.code, 1);
}

#[test]
fn binary_matches_library() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_fusion"))
        .args([
            "crystal",
            "--op",
            "f",
            "--index",
            "2",
            "--word",
            "4123322341214223",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lib = invoke(
        &[
            "crystal",
            "--op",
            "f",
            "--index",
            "2",
            "--word",
            "4123322341214223",
        ],
        "text",
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);

    let out = std::process::Command::new(env!("CARGO_BIN_EXE_fusion"))
        .arg("lr")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
