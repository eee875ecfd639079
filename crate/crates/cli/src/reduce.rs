use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;
use srd_core::format::write_graph;
use srd_core::reductions::{
    reduce_ds_cubic_to_split, reduce_ds_gadget, reduce_mrss_to_fvs, reduce_rbds_to_vc, MrssInstance, RbdsInstance,
    ReductionOutput, StructureWitness,
};

use crate::error::CliError;
use crate::report::{read_graph, read_input, InputDigest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Dominating set on cubic graphs to split graphs.
    DsSplit,
    /// Dominating set to bipartite graphs (bipartite sources).
    DsGadget,
    /// Multidimensional relaxed subset sum to bounded feedback vertex set.
    MrssFvs,
    /// Red-blue dominating set to bounded vertex cover.
    RbdsVc,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::DsSplit => "ds-split",
            Construction::DsGadget => "ds-gadget",
            Construction::MrssFvs => "mrss-fvs",
            Construction::RbdsVc => "rbds-vc",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReduceSummary {
    pub construction: Construction,
    pub n: usize,
    pub m: usize,
    pub k_prime: i64,
    pub witness: Option<&'static str>,
    pub deletion_size: Option<usize>,
    pub graph_file: PathBuf,
    pub sidecar_file: PathBuf,
}

fn witness_kind(w: &StructureWitness) -> &'static str {
    match w {
        StructureWitness::Split(_) => "split",
        StructureWitness::Bipartition(_) => "bipartition",
        StructureWitness::FeedbackVertexSet { .. } => "feedback_vertex_set",
        StructureWitness::VertexCover { .. } => "vertex_cover",
    }
}

fn build(c: Construction, input: &Path, k: Option<usize>) -> Result<(ReductionOutput, InputDigest), CliError> {
    let need_k = || k.ok_or_else(|| CliError::Invalid(format!("{}: --k is required", c.name())));
    let fail = |e: srd_core::reductions::ReductionError| CliError::Invalid(format!("{}: {e}", c.name()));
    match c {
        Construction::DsSplit | Construction::DsGadget => {
            let (g, digest) = read_graph(input)?;
            let k = need_k()?;
            let out = if c == Construction::DsSplit {
                reduce_ds_cubic_to_split(&g, k).map_err(fail)?.output
            } else {
                reduce_ds_gadget(&g, k).map_err(fail)?.output
            };
            Ok((out, digest))
        }
        Construction::MrssFvs => {
            let (text, digest) = read_input(input)?;
            let inst: MrssInstance = serde_json::from_str(&text).map_err(|e| CliError::parse(input, e))?;
            Ok((reduce_mrss_to_fvs(&inst).map_err(fail)?.output, digest))
        }
        Construction::RbdsVc => {
            let (text, digest) = read_input(input)?;
            let mut inst = RbdsInstance::parse(&text).map_err(|e| CliError::parse(input, e))?;
            if let Some(k) = k {
                inst.k = k;
            }
            Ok((reduce_rbds_to_vc(&inst).map_err(fail)?.output, digest))
        }
    }
}

/// Writes `<out>.graph` and `<out>.sidecar.json`.
pub fn reduce(
    c: Construction,
    input: &Path,
    k: Option<usize>,
    out: &Path,
) -> Result<(ReduceSummary, InputDigest), CliError> {
    let (output, digest) = build(c, input, k)?;
    let graph_file = with_suffix(out, ".graph");
    let sidecar_file = with_suffix(out, ".sidecar.json");
    std::fs::write(&graph_file, write_graph(&output.graph)).map_err(|e| CliError::io(&graph_file, e))?;
    let sidecar = serde_json::to_string_pretty(&output.sidecar()).map_err(|e| CliError::Internal(e.to_string()))?;
    std::fs::write(&sidecar_file, sidecar + "\n").map_err(|e| CliError::io(&sidecar_file, e))?;
    let summary = ReduceSummary {
        construction: c,
        n: output.graph.n(),
        m: output.graph.m(),
        k_prime: output.k_prime,
        witness: output.witness.as_ref().map(witness_kind),
        deletion_size: output.witness.as_ref().and_then(StructureWitness::deletion_size),
        graph_file,
        sidecar_file,
    };
    Ok((summary, digest))
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}
