#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use fusion_cli::{run, Outcome};

/// Golden cases: file stem, expected exit code, arguments after the program name.
pub const CASES: &[(&str, i32, &[&str])] = &[
    (
        "coeff_all",
        0,
        &[
            "coeff", "--level", "3", "--rank", "3", "--lambda", "1,1", "--mu", "2,2,2", "--nu",
            "4,2,2", "--method", "all",
        ],
    ),
    (
        "coeff_pos",
        0,
        &[
            "coeff", "--level", "4", "--rank", "3", "--lambda", "3,1", "--mu", "4,2,1", "--nu",
            "5,5,1", "--method", "pos",
        ],
    ),
    (
        "coeff_empty_lambda",
        0,
        &[
            "coeff", "--level", "3", "--rank", "3", "--lambda", "-", "--mu", "2,1", "--nu", "2,1",
        ],
    ),
    (
        "coeff_invalid_nu",
        2,
        &[
            "coeff", "--level", "2", "--rank", "2", "--lambda", "1", "--mu", "1", "--nu", "3,1",
        ],
    ),
    (
        "expand",
        0,
        &[
            "expand", "--level", "3", "--rank", "3", "--lambda", "2,1", "--mu", "2,1",
        ],
    ),
    (
        "lr",
        0,
        &["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"],
    ),
    ("tabloids", 0, &["tabloids", "--shape", "2,2,2"]),
    (
        "cylindric",
        0,
        &[
            "cylindric",
            "--level",
            "3",
            "--rank",
            "3",
            "--outer",
            "4,2,2",
            "--inner",
            "1,1",
            "--content",
            "2,2,2",
        ],
    ),
    (
        "crystal_reflect",
        0,
        &[
            "crystal",
            "--op",
            "s",
            "--index",
            "2",
            "--word",
            "4123322341214223",
        ],
    ),
    (
        "crystal_raise",
        0,
        &[
            "crystal",
            "--op",
            "e",
            "--index",
            "2",
            "--word",
            "4123322341214223",
        ],
    ),
    (
        "crystal_annihilated",
        0,
        &["crystal", "--op", "e", "--index", "1", "--word", "1121"],
    ),
    (
        "crosscheck",
        0,
        &[
            "crosscheck",
            "--level",
            "2",
            "--rank",
            "2",
            "--max-weight",
            "4",
        ],
    ),
];

pub const FORMATS: &[&str] = &["text", "json"];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn invoke(args: &[&str], format: &str) -> Outcome {
    let mut argv = vec!["fusion", "--format", format];
    argv.extend_from_slice(args);
    run(argv)
}

/// Stdout for successful cases, stderr otherwise.
pub fn captured(o: &Outcome) -> &str {
    if o.code == 0 {
        &o.stdout
    } else {
        &o.stderr
    }
}

/// Compares every case in every format against its golden file. With
/// `FUSION_BLESS=1` the files are rewritten instead.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("FUSION_BLESS").is_some();
    let mut problems = Vec::new();
    for (name, code, args) in CASES {
        for format in FORMATS {
            let ext = if *format == "json" && *code == 0 {
                "json"
            } else {
                "txt"
            };
            let path = golden_dir().join(format!("{name}.{format}.{ext}"));
            let o = invoke(args, format);
            if o.code != *code {
                problems.push(format!(
                    "{name} ({format}): exit {} expected {code}: {}",
                    o.code, o.stderr
                ));
                continue;
            }
            if bless {
                fs::write(&path, captured(&o)).unwrap();
                continue;
            }
            match fs::read_to_string(&path) {
                Ok(want) if want == captured(&o) => {}
                Ok(_) => problems.push(format!(
                    "{name} ({format}): output differs from {}",
                    path.display()
                )),
                Err(e) => problems.push(format!("{name} ({format}): {}: {e}", path.display())),
            }
        }
    }
    problems
}

/// Parses each JSON output and re-serializes it; returns the cases that change.
pub fn check_round_trip() -> Vec<String> {
    let mut problems = Vec::new();
    for (name, code, args) in CASES {
        if *code != 0 {
            continue;
        }
        let o = invoke(args, "json");
        let value: serde_json::Value = match serde_json::from_str(&o.stdout) {
            Ok(v) => v,
            Err(e) => {
                problems.push(format!("{name}: {e}"));
                continue;
            }
        };
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        if again != o.stdout {
            problems.push(format!("{name}: re-serialized JSON differs"));
        }
    }
    problems
}
