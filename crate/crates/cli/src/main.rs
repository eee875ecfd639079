//! `srd`: solve, verify, reduce, generate, analyze and bench signed Roman
//! domination instances.
//!
//! Exit codes: 0 success, 2 invalid input, 3 timeout without certificate,
//! 4 solver disagreement.

mod bench;
mod error;
mod reduce;
mod report;
mod solve;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde::Serialize;
use srd_core::format::write_graph;
use srd_core::generate::{generate, GraphKind};
use srd_core::nd::{nd_partition, ClassKind};
use srd_core::srdf::lower_bound_by_components;
use srd_core::{is_valid_srdf, lower_bound_degree, weight, Algo, Labeling, Verdict};

use error::{exit, CliError};
use reduce::Construction;
use report::{emit, emit_report, read_graph, read_input, to_value, RunReport};

#[derive(Debug, Parser)]
#[command(name = "srd", version, about = "Signed Roman domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute γ_sR of a graph, optionally deciding `γ_sR ≤ k`.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value = "bb")]
        algo: Algo,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        #[arg(long, default_value_t = 60)]
        timeout_s: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling (`{"labels": [...]}` or a solve report) against a graph.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a hardness construction; writes `<out>.graph` and `<out>.sidecar.json`.
    Reduce {
        #[arg(value_enum)]
        construction: Construction,
        instance: PathBuf,
        /// Source budget; overrides the value in an RBDS file.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit a graph from a named family in edge-list format.
    Generate {
        kind: GraphKind,
        params: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree statistics, type classes and the degree lower bound.
    Analyze {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve every graph of a directory with several algorithms; CSV output.
    Bench {
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = Algo::ALL)]
        algos: Vec<Algo>,
        #[arg(long, default_value_t = 60)]
        timeout_s: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct VerifyPayload {
    weight: i64,
    verdict: Verdict,
}

#[derive(Debug, Serialize)]
struct Bound {
    numer: i64,
    denom: i64,
    ceil: i64,
}

#[derive(Debug, Serialize)]
struct AnalyzePayload {
    n: usize,
    m: usize,
    max_degree: usize,
    min_degree: usize,
    t: usize,
    classes: Vec<Vec<usize>>,
    kinds: Vec<ClassKind>,
    class_adjacency: Vec<(usize, usize)>,
    lower_bound: Bound,
    lower_bound_by_components: i64,
}

fn parse_labeling(path: &Path, text: &str) -> Result<Labeling, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::parse(path, e))?;
    let inner = match value.pointer("/payload/witness") {
        Some(w) => w.clone(),
        None => value,
    };
    serde_json::from_value(inner).map_err(|e| CliError::parse(path, e))
}

fn finish(command: &[String], inputs: Vec<report::InputDigest>, payload: serde_json::Value, start: Instant, certified: bool, out: Option<&Path>) -> Result<i32, CliError> {
    let report = RunReport {
        command: command.to_vec(),
        inputs,
        payload,
        wall_ms: start.elapsed().as_millis() as u64,
        certified,
    };
    emit_report(&report, out)?;
    Ok(if certified { exit::OK } else { exit::UNCERTIFIED })
}

fn run(cli: Cli, argv: &[String]) -> Result<i32, CliError> {
    let start = Instant::now();
    match cli.command {
        Command::Solve {
            graph,
            algo,
            k,
            timeout_s,
            out,
        } => {
            let (g, digest) = read_graph(&graph)?;
            let r = solve::run_solver(&g, algo, Duration::from_secs(timeout_s))?;
            let payload = solve::SolvePayload::new(&g, &r, k);
            if !payload.verdict.valid || payload.weight != r.optimum {
                return Err(CliError::Internal("solver returned an invalid witness".into()));
            }
            finish(argv, vec![digest], to_value(&payload)?, start, r.certified, out.as_deref())
        }
        Command::Verify { graph, labeling, out } => {
            let (g, g_digest) = read_graph(&graph)?;
            let (text, l_digest) = read_input(&labeling)?;
            let f = parse_labeling(&labeling, &text)?;
            if f.len() != g.n() {
                return Err(CliError::Invalid(format!(
                    "labeling has {} labels, graph has {} vertices",
                    f.len(),
                    g.n()
                )));
            }
            let payload = VerifyPayload {
                weight: weight(&f),
                verdict: is_valid_srdf(&g, &f),
            };
            finish(argv, vec![g_digest, l_digest], to_value(&payload)?, start, true, out.as_deref())
        }
        Command::Reduce {
            construction,
            instance,
            k,
            out,
        } => {
            let (summary, digest) = reduce::reduce(construction, &instance, k, &out)?;
            finish(argv, vec![digest], to_value(&summary)?, start, true, None)
        }
        Command::Generate { kind, params, seed, out } => {
            let g = generate(kind, &params, seed).map_err(|e| CliError::Invalid(e.to_string()))?;
            let args: Vec<String> = params.iter().map(ToString::to_string).collect();
            let mut text = format!("# {kind} {}", args.join(" "));
            if let Some(seed) = seed {
                text += &format!(" seed={seed}");
            }
            text += "\n";
            text += &write_graph(&g);
            emit(&text, out.as_deref())?;
            Ok(exit::OK)
        }
        Command::Analyze { graph, out } => {
            let (g, digest) = read_graph(&graph)?;
            let p = nd_partition(&g);
            let bound = lower_bound_degree(&g);
            let class_adjacency = (0..p.t())
                .flat_map(|i| p.neighbours(i).iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
                .collect();
            let payload = AnalyzePayload {
                n: g.n(),
                m: g.m(),
                max_degree: g.max_degree(),
                min_degree: g.min_degree(),
                t: p.t(),
                classes: p.classes().to_vec(),
                kinds: p.kinds().to_vec(),
                class_adjacency,
                lower_bound: Bound {
                    numer: *bound.numer(),
                    denom: *bound.denom(),
                    ceil: bound.ceil().to_integer(),
                },
                lower_bound_by_components: lower_bound_by_components(&g),
            };
            finish(argv, vec![digest], to_value(&payload)?, start, true, out.as_deref())
        }
        Command::Bench {
            corpus,
            algos,
            timeout_s,
            out,
        } => {
            let rows = bench::bench(&corpus, &algos, Duration::from_secs(timeout_s))?;
            emit(&bench::to_csv(&rows)?, out.as_deref())?;
            let bad = bench::disagreements(&rows);
            if !bad.is_empty() {
                return Err(CliError::Disagreement(bad.join("; ")));
            }
            Ok(if rows.iter().any(|r| r.status == "timeout") {
                exit::UNCERTIFIED
            } else {
                exit::OK
            })
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match run(cli, &argv) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
