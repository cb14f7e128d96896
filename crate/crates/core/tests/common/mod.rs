#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use gbdetect::cli::{run, Outcome};

pub fn crate_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus_dir() -> PathBuf {
    crate_root().join("tests/corpus")
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn load_cases() -> Vec<Case> {
    let text = fs::read_to_string(corpus_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once('|').expect("`name | args`");
            Case {
                name: name.trim().to_string(),
                args: args.split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

/// Runs the CLI with the crate root as working directory, so that corpus
/// paths and the echoed command line are stable.
pub fn run_in_root(args: &[String]) -> Outcome {
    std::env::set_current_dir(crate_root()).expect("chdir");
    run(args)
}

/// Zeroes the one field that varies between runs.
pub fn normalize_timing(stdout: &str) -> String {
    stdout
        .lines()
        .map(|line| {
            let trimmed = line.trim_start();
            if trimmed.starts_with("\"wall_time_ms\":") {
                let indent = &line[..line.len() - trimmed.len()];
                let comma = if trimmed.ends_with(',') { "," } else { "" };
                format!("{indent}\"wall_time_ms\": 0{comma}\n")
            } else {
                format!("{line}\n")
            }
        })
        .collect()
}

pub fn render(out: &Outcome, json: bool) -> String {
    let stdout = if json {
        normalize_timing(&out.stdout)
    } else {
        out.stdout.clone()
    };
    format!(
        "exit {}\n--- stdout\n{stdout}--- stderr\n{}",
        out.code, out.stderr
    )
}

pub fn schema_validator() -> jsonschema::Validator {
    let schema: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(crate_root().join("schema/run_report.schema.json"))
            .expect("schema file"),
    )
    .expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// Checks every corpus case in text and JSON form against its golden file.
/// With `bless`, rewrites the goldens instead. Returns one message per
/// mismatch.
pub fn check_goldens(bless: bool) -> Vec<String> {
    let validator = schema_validator();
    let golden_dir = corpus_dir().join("golden");
    let mut problems = Vec::new();
    for case in load_cases() {
        for json in [false, true] {
            let mut args = case.args.clone();
            if json {
                args.push("--json".into());
            }
            let out = run_in_root(&args);
            if json && out.code != 2 {
                let value: serde_json::Value = match serde_json::from_str(&out.stdout) {
                    Ok(v) => v,
                    Err(e) => {
                        problems.push(format!("{}: stdout is not JSON: {e}", case.name));
                        continue;
                    }
                };
                if let Err(e) = validator.validate(&value) {
                    problems.push(format!("{}: report violates schema: {e}", case.name));
                }
            }
            let actual = render(&out, json);
            let path = golden_dir.join(format!(
                "{}.{}",
                case.name,
                if json { "json" } else { "txt" }
            ));
            if bless {
                fs::write(&path, &actual).expect("write golden");
                continue;
            }
            match fs::read_to_string(&path) {
                Ok(expected) if expected == actual => {}
                Ok(expected) => problems.push(format!(
                    "{}: output differs from {}\n--- expected\n{expected}--- actual\n{actual}",
                    case.name,
                    display(&path)
                )),
                Err(_) => {
                    problems.push(format!("{}: missing golden {}", case.name, display(&path)))
                }
            }
        }
    }
    problems
}

fn display(p: &Path) -> String {
    p.strip_prefix(crate_root())
        .unwrap_or(p)
        .display()
        .to_string()
}
