//! Command line interface: forced-periodicity analysis, line factor
//! reports, covering verification, bounded search, and pattern
//! rendering.
//!
//! Exit codes: 0 for definitive positives (two-periodic or directional
//! verdicts, verified patterns, found witnesses), 10 for an inconclusive
//! analysis, 11 for a failed verification, 12 for an exhausted search,
//! 2 for usage and input errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde_json::{json, Value};

use gridcover::{
    classify, classify_convex, is_convex, parse_poly, search, verify_covering, Classification,
    CoverCheck, CoveringProblem, ExpVec, GridKind, NeighborhoodSpec, SearchStatus, Shape,
    TorusConfig, Verdict, HARD_CAP_CELLS,
};

#[derive(Parser)]
#[command(
    name = "gridcover",
    version,
    about = "Forced periodicity of perfect grid coverings"
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GridArg {
    Square,
    King,
    Triangular,
}

impl From<GridArg> for GridKind {
    fn from(g: GridArg) -> GridKind {
        match g {
            GridArg::Square => GridKind::Square,
            GridArg::King => GridKind::King,
            GridArg::Triangular => GridKind::Triangular,
        }
    }
}

#[derive(Args)]
struct NeighborhoodArgs {
    /// Named grid neighborhood (with --radius)
    #[arg(long, value_enum)]
    grid: Option<GridArg>,
    /// Ball radius for --grid
    #[arg(short, long)]
    radius: Option<u32>,
    /// Explicit neighborhood: "(x,y),(x,y),..."
    #[arg(long)]
    points: Option<String>,
    /// Neighborhood read off a characteristic polynomial's support
    #[arg(long)]
    poly_neighborhood: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify forced periodicity of all (D,b,a)-coverings
    Analyze {
        #[command(flatten)]
        neighborhood: NeighborhoodArgs,
        /// Ones required in the neighborhood of a one
        #[arg(short)]
        b: u32,
        /// Ones required in the neighborhood of a zero
        #[arg(short)]
        a: u32,
        /// Use the convex-neighborhood specialization
        #[arg(long)]
        convex: bool,
    },
    /// Report the line polynomial factors of a polynomial
    Factors {
        /// Polynomial text, e.g. "x^-1+y^-1+1+x+y"
        poly: String,
    },
    /// Check a pattern file against the covering condition
    Verify {
        /// Pattern file: "p q s" header, then q rows of p cells
        #[arg(long)]
        pattern: PathBuf,
        #[command(flatten)]
        neighborhood: NeighborhoodArgs,
        #[arg(short)]
        b: u32,
        #[arg(short)]
        a: u32,
    },
    /// Search two-periodic configurations for a covering witness
    Search {
        #[command(flatten)]
        neighborhood: NeighborhoodArgs,
        #[arg(short)]
        b: u32,
        #[arg(short)]
        a: u32,
        /// Largest fundamental domain area to try
        #[arg(long)]
        max_area: u64,
        /// Write <OUT>.pattern and <OUT>.pbm for a found witness
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Input or usage failure; always exits with code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_point_list(text: &str) -> Result<Vec<ExpVec>, UsageError> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut points = Vec::new();
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(UsageError(format!(
                "expected '(' in point list near `{rest}`"
            )));
        };
        let Some((pair, tail)) = stripped.split_once(')') else {
            return Err(UsageError("unclosed '(' in point list".into()));
        };
        let Some((xs, ys)) = pair.split_once(',') else {
            return Err(UsageError(format!("expected `x,y` in `({pair})`")));
        };
        let x: i64 = xs
            .parse()
            .map_err(|_| UsageError(format!("bad integer `{xs}`")))?;
        let y: i64 = ys
            .parse()
            .map_err(|_| UsageError(format!("bad integer `{ys}`")))?;
        points.push(ExpVec::new(x, y));
        rest = tail.strip_prefix(',').unwrap_or(tail);
        if rest == tail && !tail.is_empty() && !tail.starts_with('(') {
            return Err(UsageError(format!(
                "expected ',' between points near `{tail}`"
            )));
        }
    }
    if points.is_empty() {
        return Err(UsageError("empty point list".into()));
    }
    Ok(points)
}

impl NeighborhoodArgs {
    fn resolve(&self) -> Result<(Shape, Value), UsageError> {
        let spec = match (&self.grid, &self.points, &self.poly_neighborhood) {
            (Some(grid), None, None) => {
                let radius = self
                    .radius
                    .ok_or_else(|| UsageError("--grid requires --radius".into()))?;
                if radius == 0 {
                    return Err(UsageError("radius must be at least 1".into()));
                }
                NeighborhoodSpec::Grid {
                    kind: (*grid).into(),
                    radius,
                }
            }
            (None, Some(points), None) => {
                NeighborhoodSpec::Explicit(Shape::from_points(parse_point_list(points)?))
            }
            (None, None, Some(text)) => {
                let poly = parse_poly(text)?;
                if poly.is_zero() {
                    return Err(UsageError("zero polynomial has no support".into()));
                }
                if !poly.terms().all(|(_, c)| c.is_one()) {
                    return Err(UsageError(
                        "a characteristic polynomial has coefficient 1 on every term".into(),
                    ));
                }
                NeighborhoodSpec::Explicit(Shape::from_points(poly.support().map(|e| -*e)))
            }
            _ => {
                return Err(UsageError(
                    "give exactly one of --grid, --points, --poly-neighborhood".into(),
                ))
            }
        };
        let shape = spec.shape();
        let mut echo = json!({ "points": shape.to_string(), "size": shape.len() });
        if let NeighborhoodSpec::Grid { kind, radius } = spec {
            echo["grid"] = json!(kind.name());
            echo["radius"] = json!(radius);
        }
        Ok((shape, echo))
    }
}

fn classification_json(c: &Classification) -> (Value, Value) {
    let verdict = match &c.verdict {
        Verdict::AllTwoPeriodic => json!("all-two-periodic"),
        Verdict::AllPeriodicInDirection(v) => json!(format!("all-periodic-in-direction {v}")),
        Verdict::Inconclusive => json!("inconclusive"),
    };
    let factors: Vec<Value> = c
        .evidence
        .entries
        .iter()
        .map(|e| json!({ "direction": e.direction.to_string(), "factor": e.factor.to_string() }))
        .collect();
    let evidence = json!({
        "periodizer": c.periodizer.to_string(),
        "line_factors": factors,
    });
    (verdict, evidence)
}

fn emit(record: &Value, text: &[String], as_json: bool) {
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(record).expect("serializable")
        );
    } else {
        for line in text {
            println!("{line}");
        }
    }
}

fn effective_cap() -> u64 {
    match std::env::var("GRIDCOVER_MAX_AREA") {
        Ok(v) => match v.parse::<u64>() {
            // the environment can only lower the built-in cap
            Ok(n) => n.min(HARD_CAP_CELLS),
            Err(_) => HARD_CAP_CELLS,
        },
        Err(_) => HARD_CAP_CELLS,
    }
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    let started = Instant::now();
    let version = env!("CARGO_PKG_VERSION");
    match cli.command {
        Command::Analyze {
            neighborhood,
            b,
            a,
            convex,
        } => {
            let (shape, shape_echo) = neighborhood.resolve()?;
            if convex && !is_convex(&shape) {
                return Err(UsageError("--convex requires a convex neighborhood".into()));
            }
            let problem = CoveringProblem::new(shape, b, a)?;
            let classification = if convex {
                classify_convex(&problem)?
            } else {
                classify(&problem)
            };
            let (verdict, evidence) = classification_json(&classification);
            let record = json!({
                "command": "analyze",
                "inputs": { "neighborhood": shape_echo, "b": b, "a": a,
                            "mode": if convex { "convex" } else { "general" } },
                "verdict": verdict,
                "evidence": evidence,
                "stats": { "elapsed_ms": started.elapsed().as_secs_f64() * 1e3 },
                "version": version,
            });
            let mut text = vec![
                format!(
                    "neighborhood: {}",
                    record["inputs"]["neighborhood"]["points"].as_str().unwrap()
                ),
                format!("b = {b}, a = {a}"),
                format!("periodizer: {}", classification.periodizer),
                format!("line factors: {}", classification.evidence),
            ];
            let (verdict_line, code) = match &classification.verdict {
                Verdict::AllTwoPeriodic => ("every covering is two-periodic".to_string(), 0),
                Verdict::AllPeriodicInDirection(v) => {
                    (format!("every covering is periodic in direction {v}"), 0)
                }
                Verdict::Inconclusive => ("inconclusive".to_string(), 10),
            };
            text.push(format!("verdict: {verdict_line}"));
            emit(&record, &text, cli.json);
            Ok(code)
        }

        Command::Factors { poly } => {
            let f = parse_poly(&poly)?;
            if f.is_zero() {
                return Err(UsageError("zero polynomial rejected".into()));
            }
            let report = gridcover::line_factors(&f);
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| json!({ "direction": e.direction.to_string(), "factor": e.factor.to_string() }))
                .collect();
            let candidates: Vec<String> = gridcover::candidate_line_directions(&f)
                .iter()
                .map(|d| d.to_string())
                .collect();
            let record = json!({
                "command": "factors",
                "inputs": { "poly": f.to_string() },
                "report": entries,
                "evidence": { "candidate_directions": candidates },
                "stats": { "elapsed_ms": started.elapsed().as_secs_f64() * 1e3 },
                "version": version,
            });
            let text = vec![format!("poly: {f}"), format!("line factors: {report}")];
            emit(&record, &text, cli.json);
            Ok(0)
        }

        Command::Verify {
            pattern,
            neighborhood,
            b,
            a,
        } => {
            let (shape, shape_echo) = neighborhood.resolve()?;
            let problem = CoveringProblem::new(shape, b, a)?;
            let content = std::fs::read_to_string(&pattern)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", pattern.display())))?;
            let config = TorusConfig::from_pattern_str(&content)?;
            let check = verify_covering(&config, &problem);
            let lat = config.lattice();
            let inputs = json!({
                "neighborhood": shape_echo, "b": b, "a": a,
                "pattern": { "p": lat.p(), "q": lat.q(), "s": lat.s(),
                             "cells": config.to_pattern_string() },
            });
            let (verdict, evidence, text_line, code) = match check {
                CoverCheck::Ok => (
                    json!("ok"),
                    json!({}),
                    "result: ok, the pattern is a perfect covering".to_string(),
                    0u8,
                ),
                CoverCheck::Counterexample { cell, observed } => (
                    json!("counterexample"),
                    json!({ "cell": cell.to_string(), "observed": observed }),
                    format!("result: counterexample at {cell}: observed {observed}"),
                    11,
                ),
            };
            let record = json!({
                "command": "verify",
                "inputs": inputs,
                "verdict": verdict,
                "evidence": evidence,
                "stats": { "elapsed_ms": started.elapsed().as_secs_f64() * 1e3 },
                "version": version,
            });
            let text = vec![
                format!("pattern: {}x{} (s={})", lat.p(), lat.q(), lat.s()),
                text_line,
            ];
            emit(&record, &text, cli.json);
            Ok(code)
        }

        Command::Search {
            neighborhood,
            b,
            a,
            max_area,
            out,
        } => {
            let cap = effective_cap();
            if max_area == 0 || max_area > cap {
                return Err(UsageError(format!(
                    "--max-area must be between 1 and {cap}"
                )));
            }
            let (shape, shape_echo) = neighborhood.resolve()?;
            let problem = CoveringProblem::new(shape, b, a)?;
            let outcome = search(&problem, max_area)?;
            let stats = json!({
                "lattices_tried": outcome.stats.lattices_tried,
                "nodes_expanded": outcome.stats.nodes_expanded,
                "elapsed_ms": started.elapsed().as_secs_f64() * 1e3,
            });
            let inputs =
                json!({ "neighborhood": shape_echo, "b": b, "a": a, "max_area": max_area });
            let (record, text, code) = match &outcome.status {
                SearchStatus::Found(witness) => {
                    let lat = witness.lattice();
                    if let Some(prefix) = &out {
                        write_witness_files(prefix, witness)?;
                    }
                    let record = json!({
                        "command": "search",
                        "inputs": inputs,
                        "outcome": "found",
                        "evidence": {
                            "lattice": { "p": lat.p(), "q": lat.q(), "s": lat.s() },
                            "pattern": witness.to_pattern_string(),
                        },
                        "stats": stats,
                        "version": version,
                    });
                    let mut text = vec![
                        "outcome: found".to_string(),
                        format!("lattice: p={} q={} s={}", lat.p(), lat.q(), lat.s()),
                        "pattern:".to_string(),
                    ];
                    for line in witness.to_pattern_string().lines().skip(1) {
                        text.push(format!("  {line}"));
                    }
                    text.push(format!(
                        "stats: lattices={} nodes={}",
                        outcome.stats.lattices_tried, outcome.stats.nodes_expanded
                    ));
                    (record, text, 0u8)
                }
                SearchStatus::ExhaustedUnknown { area_bound } => {
                    let record = json!({
                        "command": "search",
                        "inputs": inputs,
                        "outcome": "exhausted-unknown",
                        "evidence": { "area_bound": area_bound },
                        "stats": stats,
                        "version": version,
                    });
                    let text = vec![
                        format!("outcome: no witness up to area {area_bound} (existence unknown)"),
                        format!(
                            "stats: lattices={} nodes={}",
                            outcome.stats.lattices_tried, outcome.stats.nodes_expanded
                        ),
                    ];
                    (record, text, 12u8)
                }
            };
            emit(&record, &text, cli.json);
            Ok(code)
        }
    }
}

fn write_witness_files(prefix: &std::path::Path, witness: &TorusConfig) -> Result<(), UsageError> {
    let pattern_path = prefix.with_extension("pattern");
    let pbm_path = prefix.with_extension("pbm");
    std::fs::write(&pattern_path, witness.to_pattern_string())
        .map_err(|e| UsageError(format!("cannot write {}: {e}", pattern_path.display())))?;
    std::fs::write(&pbm_path, witness.to_pbm_string())
        .map_err(|e| UsageError(format!("cannot write {}: {e}", pbm_path.display())))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
