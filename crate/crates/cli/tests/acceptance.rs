//! The twelve acceptance criteria, driven through the `vcsharp` binary.
//! Prints one PASS/FAIL line per criterion to stderr (uncaptured) and
//! fails at the end if any criterion failed.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

const SEED: &str = "42";

struct Run {
    args: Vec<String>,
    code: i32,
    stdout: Vec<u8>,
    elapsed: Duration,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_slice(&self.stdout).unwrap_or(Value::Null)
    }
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn vcsharp(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_vcsharp"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        args: args.iter().map(|s| s.to_string()).collect(),
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        elapsed: start.elapsed(),
    }
}

struct Outcome {
    id: usize,
    name: &'static str,
    pass: bool,
    detail: String,
}

/// Runs one suite and checks: exit 0, at least one case, no failures,
/// inside the time limit.
fn suite(
    id: usize,
    name: &'static str,
    suite: &str,
    limit: Duration,
    log: &mut Vec<Run>,
) -> Outcome {
    let run = vcsharp(&["verify", "--suite", suite, "--seed", SEED]);
    let j = run.json();
    let cases = j["cases"].as_u64().unwrap_or(0);
    let failures = j["failures"].as_u64().unwrap_or(u64::MAX);
    let pass =
        run.code == 0 && cases > 0 && failures == 0 && run.elapsed < limit && j["suite"] == suite;
    let detail = format!(
        "{cases} cases, {failures} failures, {:.2}s (limit {}s){}",
        run.elapsed.as_secs_f64(),
        limit.as_secs(),
        if failures > 0 {
            format!(", first: {}", j["failed"])
        } else {
            String::new()
        }
    );
    log.push(run);
    Outcome {
        id,
        name,
        pass,
        detail,
    }
}

fn golden_table(log: &mut Vec<Run>) -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut expect = |file: &str, class: &str, rule: &str| {
        let run = vcsharp(&["classify", &fixture(file)]);
        let j = run.json();
        let rules: Vec<&str> = j["trace"]
            .as_array()
            .map(|t| t.iter().filter_map(|s| s["rule"].as_str()).collect())
            .unwrap_or_default();
        if run.code != 0 || j["class"] != class || !rules.contains(&rule) {
            problems.push(format!(
                "{file}: exit {} {}",
                run.code,
                String::from_utf8_lossy(&run.stdout)
            ));
        }
        log.push(run);
    };
    expect("all_finite_chains.json", "continuum", "R2");
    expect("omega_rationals.json", "one", "R2");
    expect("fan.json", "one", "R6");
    expect("finite_chain.json", "zero", "R0");
    expect("wild_union.json", "continuum", "R4");
    let run = vcsharp(&["classify", &fixture("antichain_root.json")]);
    let j = run.json();
    if run.code != 2 || j["error"]["kind"] != "validation" || j["error"]["clause"] != "fmd-rooted" {
        problems.push(format!("antichain root: exit {} {j}", run.code));
    }
    log.push(run);
    let suite_run = vcsharp(&["verify", "--suite", "classifier_golden", "--seed", SEED]);
    if suite_run.code != 0 || suite_run.json()["failures"] != 0 {
        problems.push(format!(
            "suite: {}",
            String::from_utf8_lossy(&suite_run.stdout)
        ));
    }
    log.push(suite_run);
    let elapsed = start.elapsed();
    // every classification itself must be well under a second
    let slowest = log
        .iter()
        .rev()
        .take(7)
        .map(|r| r.elapsed)
        .max()
        .unwrap_or_default();
    if slowest >= Duration::from_secs(1) {
        problems.push(format!(
            "slowest invocation took {:.2}s",
            slowest.as_secs_f64()
        ));
    }
    Outcome {
        id: 11,
        name: "classifier golden table",
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("6 goldens exact, {:.2}s total", elapsed.as_secs_f64())
        } else {
            problems.join("; ")
        },
    }
}

fn determinism(log: &[Run]) -> Outcome {
    let mut differing = Vec::new();
    for first in log {
        let args: Vec<&str> = first.args.iter().map(String::as_str).collect();
        let second = vcsharp(&args);
        if second.stdout != first.stdout || second.code != first.code {
            differing.push(first.args.join(" "));
        }
    }
    Outcome {
        id: 12,
        name: "determinism",
        pass: differing.is_empty(),
        detail: if differing.is_empty() {
            format!("{} invocations byte-identical on rerun", log.len())
        } else {
            format!("differ: {}", differing.join(", "))
        },
    }
}

#[test]
fn acceptance_criteria() {
    let secs = Duration::from_secs;
    let mut log = Vec::new();
    let mut outcomes = vec![
        suite(1, "distributivity", "distributivity", secs(30), &mut log),
        suite(
            2,
            "components of products",
            "product_components",
            secs(30),
            &mut log,
        ),
        suite(3, "tree identities", "tree_identities", secs(30), &mut log),
        suite(4, "cancellation", "cancellation", secs(30), &mut log),
        suite(
            5,
            "rooted-tree extraction",
            "rooted_extraction",
            secs(60),
            &mut log,
        ),
        suite(
            6,
            "rooted-tree product cancellation",
            "rooted_cancellation",
            secs(60),
            &mut log,
        ),
        suite(
            7,
            "chain factorization",
            "chain_factorization",
            secs(30),
            &mut log,
        ),
        suite(8, "game equivalence", "ef", secs(120), &mut log),
        suite(9, "class C", "class_c", secs(30), &mut log),
        suite(10, "monomorphic decomposition", "fmd", secs(300), &mut log),
    ];
    outcomes.push(golden_table(&mut log));
    outcomes.push(determinism(&log));

    let mut err = std::io::stderr().lock();
    for o in &outcomes {
        let _ = writeln!(
            err,
            "criterion {:>2} {:<34} {}  {}",
            o.id,
            o.name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn documented_cli_examples() {
    let iso = vcsharp(&["iso", &fixture("c2uc2.json"), &fixture("a2xc2.json")]);
    assert_eq!(iso.code, 0);
    let j = iso.json();
    assert_eq!(j["isomorphic"], true);
    assert_eq!(j["witness"].as_array().map(Vec::len), Some(4));

    let all = vcsharp(&["verify", "--seed", SEED]);
    assert_eq!(all.code, 0, "{}", String::from_utf8_lossy(&all.stdout));
    let j = all.json();
    assert_eq!(j["failures"], 0);
    assert_eq!(j["suites"].as_array().map(Vec::len), Some(11));
}

#[test]
fn exit_codes() {
    assert_eq!(vcsharp(&["no-such-command"]).code, 2);
    assert_eq!(vcsharp(&["iso", "--bogus-flag", "a", "b"]).code, 2);
    assert_eq!(vcsharp(&["iso", "/no/such/file", "/no/such/file"]).code, 2);
    assert_eq!(vcsharp(&["verify", "--suite", "nope"]).code, 2);
    assert_eq!(vcsharp(&["ot", "enum", "9"]).code, 3);
    let big = vcsharp(&["orbits", &fixture("c2uc2.json"), "--max-k", "30"]);
    assert_eq!(big.code, 3);
    assert_eq!(big.json()["error"]["kind"], "resource");
    let nested = r#"{"op":"union_omega","components":[{"expr":{"op":"union_omega","components":[],"schema":"all_finite_chains"},"multiplicity":"omega"}]}"#;
    let r = vcsharp(&["classify", nested]);
    assert_eq!(r.code, 2, "{}", String::from_utf8_lossy(&r.stdout));
}

#[test]
fn struct_and_term_commands() {
    let c2 = fixture("c2uc2.json");
    let comps = vcsharp(&["struct", "components", &c2]).json();
    assert_eq!(comps["blocks"], serde_json::json!([[0, 1], [2, 3]]));
    assert_eq!(
        vcsharp(&["struct", "diameter", &c2]).json()["diameter"],
        Value::Null
    );
    let chain = vcsharp(&["struct", "gen", "chain", "3"]);
    let chain_json = String::from_utf8(chain.stdout.clone()).unwrap();
    let d = vcsharp(&["decompose", chain_json.trim()]).json();
    assert_eq!(d["blocks"], serde_json::json!([[0, 1, 2]]));

    let eta = fixture("eta.json");
    assert_eq!(vcsharp(&["ot", "rank", &eta]).json()["rank"], 1);
    assert_eq!(vcsharp(&["ot", "enum", "2"]).json()["count"], 16);
    assert_eq!(
        vcsharp(&["ot", "jump", &eta, "--k", "1"]).json()["jump"],
        false
    );
    let two = r#"{"op":"sum","args":[{"op":"one"},{"op":"one"}]}"#;
    assert_eq!(
        vcsharp(&["ot", "jump", two, "--k", "1"]).json()["jump"],
        true
    );

    let ef = vcsharp(&["ef", &c2, &fixture("a2xc2.json"), "--rounds", "3"]).json();
    assert_eq!(ef["equivalent"], true);

    let closure = vcsharp(&["closure", &fixture("basis.json"), "--depth", "1"]).json();
    assert_eq!(closure["count"], 8);
}
