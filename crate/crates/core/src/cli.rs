//! Command-line front end. [`run_cli`] does all the work and returns what
//! the binary should print, so it can be driven from tests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decision::decide;
use crate::error::Error;
use crate::io::{
    digest, lab_report_json, parse_softset, scalar_json, DocumentError, InputDigest, RunReport, SoftSetDocument,
};
use crate::lab::{self, Instance, LabReport, LabTarget, SearchBounds, SearchMode, SimilarityTarget};
use crate::measures::{
    entropy_t2, evaluate_t1, evaluate_t2, rational_string, round_decimal, similarity_profile, similarity_sd,
    similarity_se, similarity_sm, DistanceMeasureId, MeasureValue,
};
use crate::t1::{Containment, TypeOneSoftSet};
use crate::t2::TypeTwoSoftSet;

/// Random trials used when an exhaustive check does not fit its caps.
pub const FALLBACK_TRIALS: u64 = 10_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "softset",
    version,
    about = "Type-1 and Type-2 soft set measures, axiom checks and decisions"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// How inner images are compared in containment checks.
    #[arg(long, global = true, value_enum, default_value_t = ContainmentArg::Subset)]
    containment: ContainmentArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ContainmentArg {
    Subset,
    Equality,
}

impl From<ContainmentArg> for Containment {
    fn from(c: ContainmentArg) -> Self {
        match c {
            ContainmentArg::Subset => Containment::Subset,
            ContainmentArg::Equality => Containment::Equality,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance between two Type-1 soft sets.
    Distance {
        #[arg(long, value_parser = t1_measure)]
        measure: DistanceMeasureId,
        a: PathBuf,
        b: PathBuf,
    },
    /// Distance between two Type-2 soft sets.
    Distance2 {
        #[arg(long, value_parser = t2_measure)]
        measure: DistanceMeasureId,
        a: PathBuf,
        b: PathBuf,
    },
    /// Entropy of a Type-2 soft set.
    Entropy { a: PathBuf },
    /// Scalar similarity between two Type-2 soft sets.
    Similarity {
        /// sm, se or sd:<Dp|Dm|NDp|NDm>
        #[arg(long, value_parser = scalar_similarity)]
        measure: SimilarityTarget,
        a: PathBuf,
        b: PathBuf,
    },
    /// Per-parameter similarity profile of two Type-2 soft sets.
    Profile { a: PathBuf, b: PathBuf },
    /// Search small soft-set spaces for axiom violations.
    Check(CheckArgs),
    /// Choose the best candidate for each parameter of an ideal.
    Decide {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(required = true)]
        candidates: Vec<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// A distance code, Em, sm, se, sd:<code> or profile.
    #[arg(long, value_parser = lab_target)]
    target: LabTarget,
    #[arg(long, default_value_t = 2)]
    max_universe: usize,
    /// Parameter pool (Type-1) or primary pool (Type-2).
    #[arg(long, default_value_t = 2)]
    max_primary: usize,
    #[arg(long, default_value_t = 2)]
    max_underlying: usize,
    /// Sample this many random cases per axiom instead of enumerating.
    #[arg(long, value_name = "N")]
    random: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Soft set documents checked in addition to the generated space.
    #[arg(long, value_name = "FILE")]
    include: Vec<PathBuf>,
    /// Skip the built-in worked examples.
    #[arg(long)]
    no_builtin_seeds: bool,
}

fn t1_measure(s: &str) -> Result<DistanceMeasureId, String> {
    match s.parse::<DistanceMeasureId>() {
        Ok(id) if id.is_t1() => Ok(id),
        _ => Err(format!("expected one of e, q, dp, dm; got `{s}`")),
    }
}

fn t2_measure(s: &str) -> Result<DistanceMeasureId, String> {
    match s.parse::<DistanceMeasureId>() {
        Ok(id) if !id.is_t1() => Ok(id),
        _ => Err(format!("expected one of Dp, Dm, NDp, NDm; got `{s}`")),
    }
}

fn scalar_similarity(s: &str) -> Result<SimilarityTarget, String> {
    match s.parse::<LabTarget>() {
        Ok(LabTarget::Similarity(t)) if t != SimilarityTarget::Profile => Ok(t),
        _ => Err(format!("expected sm, se or sd:<Dp|Dm|NDp|NDm>; got `{s}`")),
    }
}

fn lab_target(s: &str) -> Result<LabTarget, String> {
    s.parse::<LabTarget>().map_err(|e| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } => EXIT_IO,
            CliError::Document { source, .. } => source.exit_code(),
            CliError::Core(_) => EXIT_INVALID,
        }
    }
}

struct Session {
    inputs: Vec<InputDigest>,
}

impl Session {
    fn load(&mut self, path: &Path) -> Result<Instance, CliError> {
        let shown = path.display().to_string();
        let wrap = |source| CliError::Document {
            path: shown.clone(),
            source,
        };
        let bytes = std::fs::read(path).map_err(|source| CliError::Read {
            path: shown.clone(),
            source,
        })?;
        self.inputs.push(InputDigest {
            path: shown.clone(),
            sha256: digest(&bytes),
        });
        let text = String::from_utf8(bytes).map_err(|e| {
            wrap(DocumentError::Syntax {
                line: 0,
                column: 0,
                message: format!("input is not UTF-8: {e}"),
            })
        })?;
        parse_softset(&text).map_err(wrap)
    }

    fn load_t1(&mut self, path: &Path) -> Result<TypeOneSoftSet, CliError> {
        match self.load(path)? {
            Instance::T1(s) => Ok(s),
            Instance::T2(_) => Err(wrong_kind(path, "t1ss", "t2ss")),
        }
    }

    fn load_t2(&mut self, path: &Path) -> Result<TypeTwoSoftSet, CliError> {
        match self.load(path)? {
            Instance::T2(s) => Ok(s),
            Instance::T1(_) => Err(wrong_kind(path, "t2ss", "t1ss")),
        }
    }
}

fn wrong_kind(path: &Path, expected: &'static str, found: &'static str) -> CliError {
    CliError::Document {
        path: path.display().to_string(),
        source: DocumentError::WrongKind { expected, found },
    }
}

/// What one command produced: a JSON payload, its text rendering and the
/// exit code.
struct Outcome {
    result: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Self {
            result,
            text,
            code: EXIT_OK,
        }
    }

    fn scalar(value: MeasureValue) -> Self {
        let text = format!("{value}\n");
        Self::ok(scalar_json(&value), text)
    }
}

/// Runs the tool on `argv` (program name first).
pub fn run_cli<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliOutput {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let mut session = Session { inputs: Vec::new() };
    match execute(&cli, &mut session) {
        Ok(outcome) => {
            let stdout = if cli.json {
                RunReport::new(argv.iter().skip(1).cloned().collect(), session.inputs, outcome.result).to_json()
            } else {
                outcome.text
            };
            CliOutput {
                code: outcome.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CliOutput {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli, s: &mut Session) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Distance { measure, a, b } => {
            let (a, b) = (s.load_t1(a)?, s.load_t1(b)?);
            Ok(Outcome::scalar(evaluate_t1(*measure, &a, &b)?))
        }
        Command::Distance2 { measure, a, b } => {
            let (a, b) = (s.load_t2(a)?, s.load_t2(b)?);
            Ok(Outcome::scalar(evaluate_t2(*measure, &a, &b)?))
        }
        Command::Entropy { a } => {
            let a = s.load_t2(a)?;
            Ok(Outcome::scalar(entropy_t2(&a).into()))
        }
        Command::Similarity { measure, a, b } => {
            let (a, b) = (s.load_t2(a)?, s.load_t2(b)?);
            let value: MeasureValue = match measure {
                SimilarityTarget::Sm => similarity_sm(&a, &b)?.into(),
                SimilarityTarget::Se => similarity_se(&a, &b)?.into(),
                SimilarityTarget::Sd(id) => similarity_sd(&a, &b, *id)?.into(),
                SimilarityTarget::Profile => unreachable!("rejected by the argument parser"),
            };
            Ok(Outcome::scalar(value))
        }
        Command::Profile { a, b } => {
            let (a, b) = (s.load_t2(a)?, s.load_t2(b)?);
            let profile = similarity_profile(&a, &b)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (param, score) in profile.iter() {
                let (exact, decimal) = (rational_string(score), round_decimal(score, 3));
                writeln!(text, "{param}\t{decimal}\t{exact}").unwrap();
                rows.push(json!({"param": param, "exact": exact, "decimal": decimal}));
            }
            Ok(Outcome::ok(json!({ "profile": rows }), text))
        }
        Command::Check(args) => check(args, cli.containment.into(), s),
        Command::Decide { ideal, candidates } => {
            let ideal = s.load_t2(ideal)?;
            let sets = candidates.iter().map(|p| s.load_t2(p)).collect::<Result<Vec<_>, _>>()?;
            let report = decide(&ideal, &sets)?;
            let name = |i: usize| candidates[i].display().to_string();
            let mut text = String::new();
            let mut rows = Vec::new();
            for row in &report.rows {
                let scores: Vec<String> = row.scores.iter().map(|r| round_decimal(r, 3)).collect();
                writeln!(
                    text,
                    "{}: {} ({}){}",
                    row.param,
                    name(row.winner),
                    scores[row.winner],
                    if row.tie { " tie" } else { "" }
                )
                .unwrap();
                writeln!(text, "  scores: {}", scores.join(" ")).unwrap();
                let items: Vec<String> = row
                    .selected_items()
                    .iter()
                    .map(|(p, xs)| format!("{p}: {{{}}}", xs.join(", ")))
                    .collect();
                writeln!(text, "  selection: {}", items.join("; ")).unwrap();
                let selection = SoftSetDocument::from(&Instance::T1(row.selection.clone())).to_json_value();
                rows.push(json!({
                    "param": row.param,
                    "scores": row.scores.iter().map(|r| json!({
                        "exact": rational_string(r),
                        "decimal": round_decimal(r, 3),
                    })).collect::<Vec<_>>(),
                    "winner": row.winner,
                    "winner_input": name(row.winner),
                    "tie": row.tie,
                    "selection": selection["assignments"],
                }));
            }
            Ok(Outcome::ok(json!({ "decisions": rows }), text))
        }
    }
}

fn check(args: &CheckArgs, containment: Containment, s: &mut Session) -> Result<Outcome, CliError> {
    let seeds = args.include.iter().map(|p| s.load(p)).collect::<Result<Vec<_>, _>>()?;
    let mut bounds = match args.random {
        Some(trials) => SearchBounds::random(
            args.max_universe,
            args.max_primary,
            args.max_underlying,
            trials,
            args.seed,
        ),
        None => SearchBounds::exhaustive(args.max_universe, args.max_primary, args.max_underlying),
    }
    .with_containment(containment)
    .with_seeds(seeds);
    bounds.builtin_seeds = !args.no_builtin_seeds;

    let mut fallback = None;
    let report = match lab::run(args.target, &bounds) {
        Err(Error::BoundsTooLarge { instances, cap }) if bounds.is_exhaustive() => {
            fallback = Some(format!(
                "exhaustive space of {instances} instances exceeds the cap ({cap}); sampled {FALLBACK_TRIALS} random cases per axiom with seed {}",
                args.seed
            ));
            bounds.mode = SearchMode::Random {
                trials: FALLBACK_TRIALS,
                seed: args.seed,
            };
            lab::run(args.target, &bounds)?
        }
        other => other?,
    };
    let code = if report.violation_found() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        result: lab_report_json(&report, fallback.as_deref()),
        text: render_check(&report, fallback.as_deref()),
        code,
    })
}

fn render_check(report: &LabReport, fallback: Option<&str>) -> String {
    let mut out = String::new();
    match report.level {
        Some(level) => writeln!(out, "{}: {level}", report.target),
        None => writeln!(out, "{}", report.target),
    }
    .unwrap();
    if let Some(note) = fallback {
        writeln!(out, "note: {note}").unwrap();
    }
    for v in &report.verdicts {
        writeln!(out, "{:<14} {:<16} cases={}", v.axiom.code(), v.status.code(), v.cases).unwrap();
        let show = |w: &lab::Witness| {
            w.instances
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" | ")
        };
        if let Some(w) = &v.witness {
            writeln!(out, "  witness: {}", show(w)).unwrap();
        }
        if let Some(w) = &v.minimal {
            if Some(w) != v.witness.as_ref() {
                writeln!(out, "  minimal: {}", show(w)).unwrap();
            }
        }
    }
    out
}
