//! End-to-end tests of the command line interface: exit code taxonomy,
//! JSON record shape, input normalization round-trips, and file output.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gridcover"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("gridcover-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const DIAGONAL: &str = "5 5 0\n10000\n00100\n00001\n01000\n00010\n";

#[test]
fn analyze_exit_codes_follow_verdicts() {
    let ok = run(&[
        "analyze", "--grid", "square", "-r", "1", "-b", "2", "-a", "2",
    ]);
    assert_eq!(code(&ok), 0);

    let king = run(&["analyze", "--grid", "king", "-r", "1", "-b", "3", "-a", "2"]);
    assert_eq!(code(&king), 0);

    let inconclusive = run(&[
        "--json",
        "analyze",
        "--poly-neighborhood",
        "x^-1+y^-1+1+x+y",
        "-b",
        "2",
        "-a",
        "1",
    ]);
    assert_eq!(code(&inconclusive), 10);
    let record = json_of(&inconclusive);
    assert_eq!(record["verdict"], "inconclusive");
    let dirs: Vec<&str> = record["evidence"]["line_factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["direction"].as_str().unwrap())
        .collect();
    assert_eq!(dirs, vec!["(1,-1)", "(1,1)"]);
    for e in record["evidence"]["line_factors"].as_array().unwrap() {
        assert_eq!(e["factor"], "1+t");
    }
}

#[test]
fn analyze_periodic_in_one_direction() {
    let out = run(&[
        "--json",
        "analyze",
        "--points",
        "(1,0),(2,0)",
        "-b",
        "1",
        "-a",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["verdict"], "all-periodic-in-direction (1,0)");
}

#[test]
fn analyze_rejects_bad_inputs() {
    // constants above the neighborhood size
    let out = run(&[
        "analyze", "--grid", "square", "-r", "1", "-b", "6", "-a", "0",
    ]);
    assert_eq!(code(&out), 2);
    // no neighborhood at all
    let out = run(&["analyze", "-b", "1", "-a", "1"]);
    assert_eq!(code(&out), 2);
    // characteristic polynomials have unit coefficients
    let out = run(&[
        "analyze",
        "--poly-neighborhood",
        "2x+y",
        "-b",
        "1",
        "-a",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    // radius zero
    let out = run(&[
        "analyze", "--grid", "square", "-r", "0", "-b", "1", "-a", "1",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn convex_mode_matches_general_verdict() {
    let general = run(&[
        "--json",
        "analyze",
        "--grid",
        "triangular",
        "-r",
        "2",
        "-b",
        "3",
        "-a",
        "3",
    ]);
    let convex = run(&[
        "--json",
        "analyze",
        "--grid",
        "triangular",
        "-r",
        "2",
        "-b",
        "3",
        "-a",
        "3",
        "--convex",
    ]);
    assert_eq!(code(&general), 0);
    assert_eq!(code(&convex), 0);
    assert_eq!(json_of(&general)["verdict"], json_of(&convex)["verdict"]);
    assert_eq!(json_of(&general)["evidence"], json_of(&convex)["evidence"]);

    // non-convex neighborhoods are rejected in convex mode
    let rejected = run(&[
        "analyze",
        "--points",
        "(0,0),(2,0)",
        "-b",
        "1",
        "-a",
        "1",
        "--convex",
    ]);
    assert_eq!(code(&rejected), 2);
}

#[test]
fn factors_reports_and_errors() {
    let out = run(&["--json", "factors", "x+y+x^2*y+x*y^2"]);
    assert_eq!(code(&out), 0);
    let record = json_of(&out);
    let report = record["report"].as_array().unwrap();
    assert_eq!(report.len(), 2);
    assert_eq!(report[0]["direction"], "(1,-1)");
    assert_eq!(report[1]["direction"], "(1,1)");

    let empty = run(&["--json", "factors", "3x+y+x*y^2+x*y+x^3*y^3+x^4*y^4"]);
    assert_eq!(code(&empty), 0);
    assert!(json_of(&empty)["report"].as_array().unwrap().is_empty());

    let constant = run(&["--json", "factors", "5"]);
    assert_eq!(code(&constant), 0);
    assert!(json_of(&constant)["report"].as_array().unwrap().is_empty());

    assert_eq!(code(&run(&["factors", "0"])), 2);
    assert_eq!(code(&run(&["factors", "x + $"])), 2);
}

#[test]
fn verify_exit_codes() {
    let path = scratch("diagonal.pattern");
    std::fs::write(&path, DIAGONAL).unwrap();
    let path = path.to_str().unwrap();

    let ok = run(&[
        "verify",
        "--pattern",
        path,
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "1",
        "-a",
        "1",
    ]);
    assert_eq!(code(&ok), 0);

    let bad = run(&[
        "--json",
        "verify",
        "--pattern",
        path,
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "2",
        "-a",
        "1",
    ]);
    assert_eq!(code(&bad), 11);
    let record = json_of(&bad);
    assert_eq!(record["verdict"], "counterexample");
    assert_eq!(record["evidence"]["cell"], "(0,0)");
    assert_eq!(record["evidence"]["observed"], 1);

    // all-zeros pattern: vacuous b, a = 0
    let zeros = scratch("zeros.pattern");
    std::fs::write(&zeros, "3 2 0\n000\n000\n").unwrap();
    let ok0 = run(&[
        "verify",
        "--pattern",
        zeros.to_str().unwrap(),
        "--grid",
        "king",
        "-r",
        "1",
        "-b",
        "4",
        "-a",
        "0",
    ]);
    assert_eq!(code(&ok0), 0);

    let malformed = scratch("malformed.pattern");
    std::fs::write(&malformed, "5 5\n10000\n").unwrap();
    let err = run(&[
        "verify",
        "--pattern",
        malformed.to_str().unwrap(),
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "1",
        "-a",
        "1",
    ]);
    assert_eq!(code(&err), 2);

    let missing = run(&[
        "verify",
        "--pattern",
        "/nonexistent.pattern",
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "1",
        "-a",
        "1",
    ]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn search_exit_codes_and_files() {
    let found = run(&[
        "--json",
        "search",
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "1",
        "-a",
        "1",
        "--max-area",
        "25",
    ]);
    assert_eq!(code(&found), 0);
    let record = json_of(&found);
    assert_eq!(record["outcome"], "found");
    assert_eq!(record["evidence"]["lattice"]["p"], 5);
    assert_eq!(record["evidence"]["lattice"]["q"], 1);
    assert_eq!(record["evidence"]["lattice"]["s"], 2);

    // no (1-ball, 0, 1)-covering exists: a one is forbidden by b = 0 and
    // then a = 1 is unsatisfiable; fixed by an exhaustive run
    let unknown = run(&[
        "--json",
        "search",
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "0",
        "-a",
        "1",
        "--max-area",
        "9",
    ]);
    assert_eq!(code(&unknown), 12);
    assert_eq!(json_of(&unknown)["outcome"], "exhausted-unknown");

    let trivial = run(&[
        "search",
        "--points",
        "(0,0)",
        "-b",
        "1",
        "-a",
        "0",
        "--max-area",
        "1",
    ]);
    assert_eq!(code(&trivial), 0);

    let prefix = scratch("witness");
    let out = run(&[
        "search",
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "1",
        "-a",
        "1",
        "--max-area",
        "25",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let pattern = std::fs::read_to_string(prefix.with_extension("pattern")).unwrap();
    assert_eq!(pattern, "5 1 2\n00001\n");
    let pbm = std::fs::read_to_string(prefix.with_extension("pbm")).unwrap();
    assert!(pbm.starts_with("P1\n5 1\n"));
}

#[test]
fn search_area_caps() {
    let over = run(&[
        "search",
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "1",
        "-a",
        "1",
        "--max-area",
        "37",
    ]);
    assert_eq!(code(&over), 2);

    // the environment lowers the cap
    let lowered = bin()
        .env("GRIDCOVER_MAX_AREA", "10")
        .args([
            "search",
            "--grid",
            "square",
            "-r",
            "1",
            "-b",
            "1",
            "-a",
            "1",
            "--max-area",
            "20",
        ])
        .output()
        .unwrap();
    assert_eq!(lowered.status.code(), Some(2));

    // but can never raise it
    let raised = bin()
        .env("GRIDCOVER_MAX_AREA", "100")
        .args([
            "search",
            "--grid",
            "square",
            "-r",
            "1",
            "-b",
            "1",
            "-a",
            "1",
            "--max-area",
            "37",
        ])
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(2));

    // within the lowered cap; no witness exists below area 5
    let within = bin()
        .env("GRIDCOVER_MAX_AREA", "10")
        .args([
            "search",
            "--grid",
            "square",
            "-r",
            "1",
            "-b",
            "1",
            "-a",
            "1",
            "--max-area",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(within.status.code(), Some(12));
}

#[test]
fn json_inputs_round_trip() {
    // analyze: echoed neighborhood points reproduce themselves
    let first = run(&[
        "--json", "analyze", "--grid", "square", "-r", "1", "-b", "2", "-a", "2",
    ]);
    let record = json_of(&first);
    let echoed = record["inputs"]["neighborhood"]["points"]
        .as_str()
        .unwrap()
        .to_string();
    let second = run(&[
        "--json", "analyze", "--points", &echoed, "-b", "2", "-a", "2",
    ]);
    let record2 = json_of(&second);
    assert_eq!(
        record["inputs"]["neighborhood"]["points"],
        record2["inputs"]["neighborhood"]["points"]
    );
    assert_eq!(record["verdict"], record2["verdict"]);
    assert_eq!(record["evidence"], record2["evidence"]);

    // factors: the canonical polynomial echo is a fixed point
    let first = run(&["--json", "factors", "y^-1 + x^-1 + x + y"]);
    let echo1 = json_of(&first)["inputs"]["poly"]
        .as_str()
        .unwrap()
        .to_string();
    let second = run(&["--json", "factors", &echo1]);
    let echo2 = json_of(&second)["inputs"]["poly"]
        .as_str()
        .unwrap()
        .to_string();
    assert_eq!(echo1, echo2);
    assert_eq!(json_of(&first)["report"], json_of(&second)["report"]);
}

#[test]
fn json_records_carry_schema_keys() {
    let out = run(&[
        "--json", "analyze", "--grid", "square", "-r", "1", "-b", "1", "-a", "1",
    ]);
    let record = json_of(&out);
    for key in [
        "command", "inputs", "verdict", "evidence", "stats", "version",
    ] {
        assert!(record.get(key).is_some(), "missing key {key}");
    }

    let out = run(&["--json", "factors", "x+y"]);
    let record = json_of(&out);
    for key in [
        "command", "inputs", "report", "evidence", "stats", "version",
    ] {
        assert!(record.get(key).is_some(), "missing key {key}");
    }

    let out = run(&[
        "--json",
        "search",
        "--grid",
        "square",
        "-r",
        "1",
        "-b",
        "0",
        "-a",
        "0",
        "--max-area",
        "4",
    ]);
    let record = json_of(&out);
    for key in [
        "command", "inputs", "outcome", "evidence", "stats", "version",
    ] {
        assert!(record.get(key).is_some(), "missing key {key}");
    }
}
