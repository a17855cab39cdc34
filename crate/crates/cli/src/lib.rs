//! File-driven front end for `polyprod`.
//!
//! [`run`] executes one command against a problem file and returns the
//! report the binary prints; the binary only adds argument parsing and exit
//! codes.

pub mod problem;

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use polyprod::oracle::{homology_series, product_chain_complex, smash_chain_complex};
use polyprod::simplicial::DEFAULT_MAX_VERTICES;
use polyprod::{cartan, EngineOptions, Face, Field, GradedSeries, WedgeSummand};
use serde::Serialize;
use thiserror::Error;

pub use problem::{InputFormat, Problem, ProblemSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("{origin}: {location}: {message}")]
    Parse { origin: String, location: String, message: String },

    #[error(transparent)]
    Core(#[from] polyprod::Error),

    #[error("vertex {vertex}: {source}")]
    Pair { vertex: usize, source: polyprod::Error },

    #[error("no pair descriptor for vertex {0} and no \"default\" entry")]
    MissingPair(usize),

    #[error("pair key {0:?} is neither \"default\" nor a vertex label")]
    UnknownPairKey(String),

    #[error("conflicting fields: {first} vs {second}")]
    MixedField { first: String, second: String },

    #[error("vertex {vertex} has no cell model; oracle commands need \"cells\" descriptors")]
    NeedsCells { vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    SmashSeries,
    PpSeries,
    Summands,
    OracleSmash,
    OraclePp,
    Check,
    Order,
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "smash-series" => Command::SmashSeries,
            "pp-series" => Command::PpSeries,
            "summands" => Command::Summands,
            "oracle-smash" => Command::OracleSmash,
            "oracle-pp" => Command::OraclePp,
            "check" => Command::Check,
            "order" => Command::Order,
            other => return Err(format!("unknown command {other:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub field: Option<Field>,
    pub out: OutputFormat,
    pub max_m: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { field: None, out: OutputFormat::Text, max_m: DEFAULT_MAX_VERTICES }
    }
}

/// What a command produced. `success` is false only when `check` finds a
/// mismatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub output: String,
    pub success: bool,
}

/// Runs `command` on the problem file at `path`.
pub fn run(command: Command, path: &Path, opts: &RunOptions) -> Result<Report, CliError> {
    let source =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    run_source(command, &source, InputFormat::from_path(path), &path.display().to_string(), opts)
}

/// Runs `command` on problem text already in memory.
pub fn run_source(
    command: Command,
    source: &str,
    format: InputFormat,
    origin: &str,
    opts: &RunOptions,
) -> Result<Report, CliError> {
    let spec = ProblemSpec::parse(source, format, origin)?;
    let problem = Problem::resolve(&spec, opts.field, opts.max_m)?;
    execute(command, &problem, opts)
}

pub fn execute(command: Command, problem: &Problem, opts: &RunOptions) -> Result<Report, CliError> {
    let engine = EngineOptions { field: problem.field, max_vertices: opts.max_m };
    let k = &problem.complex;
    let ok = |output: String| Ok(Report { output, success: true });
    match command {
        Command::Order => {
            let order = k.length_lex_order();
            match opts.out {
                OutputFormat::Text => ok(order.to_string()),
                OutputFormat::Json => {
                    let faces: Vec<Vec<usize>> = order.as_slice().iter().map(|f| f.vertices().collect()).collect();
                    ok(to_json(&faces))
                }
            }
        }
        Command::SmashSeries => ok(render_series(&cartan::smash_pp_series(k, &problem.models()?, &engine)?, opts.out)),
        Command::PpSeries => ok(render_series(&cartan::pp_series(k, &problem.models()?, &engine)?, opts.out)),
        Command::Summands => ok(render_summands(&cartan::wedge_summands(k, &problem.models()?, &engine)?, opts.out)),
        Command::OracleSmash => ok(render_series(&oracle_smash(problem)?, opts.out)),
        Command::OraclePp => ok(render_series(&oracle_pp(problem)?, opts.out)),
        Command::Check => {
            let models = problem.models()?;
            let smash = Comparison::new(cartan::smash_pp_series(k, &models, &engine)?, oracle_smash(problem)?);
            let pp = Comparison::new(cartan::pp_series(k, &models, &engine)?, oracle_pp(problem)?);
            let success = smash.differing_degrees.is_empty() && pp.differing_degrees.is_empty();
            let output = match opts.out {
                OutputFormat::Json => to_json(&CheckReport { equal: success, smash: &smash, pp: &pp }),
                OutputFormat::Text if success => format!("EQUAL: {}", pp.engine),
                OutputFormat::Text => {
                    let mut s = String::new();
                    for (name, c) in [("smash", &smash), ("pp", &pp)] {
                        if !c.differing_degrees.is_empty() {
                            let _ = writeln!(
                                s,
                                "MISMATCH ({name}): engine {} vs oracle {} in degrees {:?}",
                                c.engine, c.oracle, c.differing_degrees
                            );
                        }
                    }
                    s.trim_end().to_string()
                }
            };
            Ok(Report { output, success })
        }
    }
}

fn oracle_smash(problem: &Problem) -> Result<GradedSeries, CliError> {
    let c = smash_chain_complex(&problem.complex, &problem.cell_pairs()?, problem.field)?;
    Ok(homology_series(&c, false))
}

fn oracle_pp(problem: &Problem) -> Result<GradedSeries, CliError> {
    let c = product_chain_complex(&problem.complex, &problem.cell_pairs()?, problem.field)?;
    Ok(homology_series(&c, false))
}

#[derive(Debug, Serialize)]
struct Comparison {
    engine: GradedSeries,
    oracle: GradedSeries,
    differing_degrees: Vec<u32>,
}

impl Comparison {
    fn new(engine: GradedSeries, oracle: GradedSeries) -> Self {
        let differing_degrees = engine.differing_degrees(&oracle);
        Comparison { engine, oracle, differing_degrees }
    }
}

#[derive(Serialize)]
struct CheckReport<'a> {
    equal: bool,
    smash: &'a Comparison,
    pp: &'a Comparison,
}

#[derive(Serialize)]
struct SummandRecord<'a> {
    #[serde(rename = "I")]
    subset: Vec<usize>,
    sigma: Vec<usize>,
    series: &'a GradedSeries,
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("report values serialize")
}

pub fn render_series(s: &GradedSeries, out: OutputFormat) -> String {
    match out {
        OutputFormat::Text => s.to_string(),
        OutputFormat::Json => to_json(s),
    }
}

fn set_text(f: Face) -> String {
    if f.is_empty() {
        "∅".to_string()
    } else {
        f.to_set_string()
    }
}

pub fn render_summands(list: &[WedgeSummand], out: OutputFormat) -> String {
    match out {
        OutputFormat::Json => {
            let records: Vec<SummandRecord> = list
                .iter()
                .map(|w| SummandRecord {
                    subset: w.subset.vertices().collect(),
                    sigma: w.sigma.vertices().collect(),
                    series: &w.series,
                })
                .collect();
            to_json(&records)
        }
        OutputFormat::Text => list
            .iter()
            .map(|w| {
                format!(
                    "I={} sigma={} join={} d_hat={} b={} series={}",
                    set_text(w.subset),
                    set_text(w.sigma),
                    w.join_factor,
                    w.d_hat,
                    w.b_factor,
                    w.series
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX: &str = r#"{"complex":{"m":3,"generators":[[1,2],[1,3]]},
                         "pairs":{"default":{"type":"model","b":"t^4","c":"t^6","e":"t^2"}}}"#;

    fn run_text(cmd: Command, src: &str) -> Report {
        run_source(cmd, src, InputFormat::Json, "test", &RunOptions::default()).unwrap()
    }

    #[test]
    fn command_names() {
        for name in ["smash-series", "pp-series", "summands", "oracle-smash", "oracle-pp", "check", "order"] {
            assert!(name.parse::<Command>().is_ok());
        }
        assert!("series".parse::<Command>().is_err());
    }

    #[test]
    fn summand_listing_formats() {
        let text = run_text(Command::Summands, EX).output;
        assert!(text.lines().any(|l| l == "I={2,3} sigma=∅ join=t d_hat=t^4 b=t^4 series=t^9"), "{text}");
        let json = run_source(
            Command::Summands,
            EX,
            InputFormat::Json,
            "t",
            &RunOptions { out: OutputFormat::Json, ..Default::default() },
        )
        .unwrap()
        .output;
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed[0], serde_json::json!({"I": [], "sigma": [], "series": {"coeffs": {"12": "1"}}}));
    }

    #[test]
    fn oracle_commands_need_cells() {
        let e = run_source(Command::OracleSmash, EX, InputFormat::Json, "t", &RunOptions::default()).unwrap_err();
        assert!(matches!(e, CliError::NeedsCells { vertex: 1 }));
    }

    #[test]
    fn order_needs_no_pairs() {
        let src = r#"{"complex":{"m":3,"generators":[[1,3],[2,3]]}}"#;
        assert_eq!(run_text(Command::Order, src).output, "∅ < v1 < v2 < v3 < v1v3 < v2v3");
        let json = run_source(
            Command::Order,
            src,
            InputFormat::Json,
            "t",
            &RunOptions { out: OutputFormat::Json, ..Default::default() },
        )
        .unwrap()
        .output;
        assert_eq!(json, "[[],[1],[2],[3],[1,3],[2,3]]");
        assert!(matches!(
            run_source(Command::SmashSeries, src, InputFormat::Json, "t", &RunOptions::default()),
            Err(CliError::MissingPair(1))
        ));
    }

    #[test]
    fn check_reports_mismatch_degrees() {
        let engine = "t^3".parse().unwrap();
        let oracle = "t^3+t^5".parse().unwrap();
        assert_eq!(Comparison::new(engine, oracle).differing_degrees, vec![5]);
    }
}
