use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use srd_core::format::parse_graph;
use srd_core::nd::nd_partition;
use srd_core::{Algo, Graph, SolveError};

use crate::error::CliError;
use crate::solve::run_solver;

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub file: String,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub algo: Algo,
    /// Best weight found; empty when the solver refused the instance.
    pub optimum: Option<i64>,
    pub time_ms: u64,
    pub certified: bool,
    pub status: &'static str,
}

struct Instance {
    file: String,
    graph: Graph,
    t: usize,
}

/// Regular files of `dir` in name order, skipping dotfiles.
fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| CliError::io(dir, e))?;
        let path = entry.path();
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if path.is_file() && !hidden {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn load(dir: &Path) -> Result<Vec<Instance>, CliError> {
    corpus_files(dir)?
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
            let graph = parse_graph(&text).map_err(|e| CliError::parse(&path, e))?;
            let file = path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned());
            let t = nd_partition(&graph).t();
            Ok(Instance { file, graph, t })
        })
        .collect()
}

fn run_one(inst: &Instance, algo: Algo, timeout: Duration) -> Result<Row, CliError> {
    let start = Instant::now();
    let result = run_solver(&inst.graph, algo, timeout);
    let time_ms = start.elapsed().as_millis() as u64;
    let (optimum, certified, status) = match result {
        Ok(r) => (Some(r.optimum), r.certified, if r.certified { "ok" } else { "timeout" }),
        Err(SolveError::SizeCap { .. }) => (None, false, "size_cap"),
        Err(e) => return Err(e.into()),
    };
    Ok(Row {
        file: inst.file.clone(),
        n: inst.graph.n(),
        m: inst.graph.m(),
        t: inst.t,
        algo,
        optimum,
        time_ms,
        certified,
        status,
    })
}

/// Solves every corpus graph with every algorithm. Rows come back in
/// `(file, algo)` order however the work was scheduled.
pub fn bench(dir: &Path, algos: &[Algo], timeout: Duration) -> Result<Vec<Row>, CliError> {
    let instances = load(dir)?;
    let jobs: Vec<(&Instance, Algo)> = instances
        .iter()
        .flat_map(|inst| algos.iter().map(move |&a| (inst, a)))
        .collect();
    jobs.into_par_iter()
        .map(|(inst, algo)| run_one(inst, algo, timeout))
        .collect()
}

/// Describes every file whose certified optima differ between algorithms.
pub fn disagreements(rows: &[Row]) -> Vec<String> {
    let mut out = Vec::new();
    for group in rows.chunk_by(|a, b| a.file == b.file) {
        let certified: Vec<&Row> = group.iter().filter(|r| r.certified).collect();
        if certified.windows(2).any(|w| w[0].optimum != w[1].optimum) {
            let detail: Vec<String> = certified
                .iter()
                .map(|r| format!("{}={}", r.algo, r.optimum.unwrap_or_default()))
                .collect();
            out.push(format!("{}: {}", group[0].file, detail.join(", ")));
        }
    }
    out
}

pub fn to_csv(rows: &[Row]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(["file", "n", "m", "t", "algo", "optimum", "time_ms", "certified", "status"])
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    for row in rows {
        w.serialize(row).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}
