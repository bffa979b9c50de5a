//! Command definitions and their implementations.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use colorconn::oracles::{self, Cnf3Formula, OracleSolution};
use colorconn::reductions::{self, GadgetGraph};
use colorconn::{tree_cck, verifiers, EdgeColoring, Graph};

use crate::dimacs::parse_dimacs;
use crate::document::GraphDocument;
use crate::dot::to_dot;
use crate::report::{ResultDocument, WitnessDoc};
use crate::{CliError, CliResult, Exit};

#[derive(Debug, Parser)]
#[command(
    name = "colorconn",
    version,
    about = "Edge-colored graph connectivity tools"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the gadget graph of a DIMACS formula.
    Reduce {
        kind: ReduceKind,
        formula: String,
        out: String,
        /// Solve the formula and store the certificate coloring.
        #[arg(long)]
        certify: bool,
    },
    /// Check a colored graph; exit 0 if the property holds, 1 if not.
    Verify {
        kind: VerifyKind,
        graph: String,
        #[arg(short, long)]
        k: Option<usize>,
        /// Report one path per vertex pair when the property holds.
        #[arg(long)]
        witnesses: bool,
    },
    /// Compute an exact optimum on a small graph.
    Solve {
        kind: SolveKind,
        graph: String,
        #[arg(short, long)]
        k: Option<usize>,
        /// Write the optimal coloring as a graph document.
        #[arg(long)]
        out: Option<String>,
    },
    /// Compute cc_k of a tree.
    TreeCck { graph: String, k: usize },
    /// Write a Graphviz rendering.
    ExportDot { graph: String, out: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    Pc,
    Cfc,
    Mc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Mono,
    Proper,
    Cfc,
    Cck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Pc,
    Cfc,
    Mc,
    Cck,
}

pub struct Outcome {
    pub exit: Exit,
    pub report: ResultDocument,
}

/// Runs one command. `words` is echoed into the report.
pub fn run(cli: Cli, words: Vec<String>) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut report = ResultDocument::new(words);
    let exit = match cli.command {
        Command::Reduce {
            kind,
            formula,
            out,
            certify,
        } => reduce(&mut report, kind, &formula, &out, certify)?,
        Command::Verify {
            kind,
            graph,
            k,
            witnesses,
        } => verify(&mut report, kind, &graph, k, witnesses)?,
        Command::Solve {
            kind,
            graph,
            k,
            out,
        } => solve(&mut report, kind, &graph, k, out.as_deref())?,
        Command::TreeCck { graph, k } => tree(&mut report, &graph, k)?,
        Command::ExportDot { graph, out } => {
            let doc = read_document(&mut report, &graph)?;
            write_atomic(&out, &to_dot(&doc))?;
            Exit::Yes
        }
    };
    report.elapsed_ms = start.elapsed().as_millis().try_into().unwrap_or(u64::MAX);
    Ok(Outcome { exit, report })
}

fn read(report: &mut ResultDocument, path: &str) -> CliResult<String> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    report.input(path, &bytes);
    String::from_utf8(bytes).map_err(|e| CliError::Io {
        path: path.into(),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
    })
}

fn read_document(report: &mut ResultDocument, path: &str) -> CliResult<GraphDocument> {
    GraphDocument::parse(&read(report, path)?)
}

/// Writes through a sibling temporary file and a rename.
pub fn write_atomic(path: &str, text: &str) -> CliResult<()> {
    let target = Path::new(path);
    let name = target
        .file_name()
        .map_or("out".into(), |n| n.to_string_lossy().into_owned());
    let tmp = target.with_file_name(format!(".{name}.{}.tmp", std::process::id()));
    let io = |source| CliError::Io {
        path: path.into(),
        source,
    };
    let result = fs::File::create(&tmp)
        .and_then(|mut f| f.write_all(text.as_bytes()).and_then(|()| f.sync_all()))
        .and_then(|()| fs::rename(&tmp, target));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io)
}

fn reduce(
    report: &mut ResultDocument,
    kind: ReduceKind,
    formula: &str,
    out: &str,
    certify: bool,
) -> CliResult<Exit> {
    let phi = parse_dimacs(&read(report, formula)?)?;
    let gadget = match kind {
        ReduceKind::Pc => reductions::build_pc_reduction(&phi)?,
        ReduceKind::Cfc => reductions::build_cfc_reduction(&phi)?,
        ReduceKind::Mc => reductions::build_cc1_reduction(&phi)?,
    };
    report.detail("vertices", gadget.graph.n());
    report.detail("edges", gadget.graph.m());
    let coloring = if certify {
        match certificate(report, kind, &phi)? {
            Some(f) => Some(f),
            None => return Ok(Exit::No),
        }
    } else {
        None
    };
    write_gadget(out, &gadget, coloring.as_ref())?;
    Ok(Exit::Yes)
}

fn certificate(
    report: &mut ResultDocument,
    kind: ReduceKind,
    phi: &Cnf3Formula,
) -> CliResult<Option<EdgeColoring>> {
    let solved = match kind {
        ReduceKind::Mc => oracles::sat3_solve(phi)?,
        ReduceKind::Pc | ReduceKind::Cfc => oracles::nae3sat_solve(phi)?,
    };
    let Some(a) = solved else {
        report.detail("certificate", "formula has no suitable assignment");
        return Ok(None);
    };
    report.detail("assignment", a.to_string());
    let coloring = match kind {
        ReduceKind::Pc => reductions::pc_certificate_coloring(phi, &a)?,
        ReduceKind::Cfc => reductions::cfc_certificate_coloring(phi, &a)?,
        ReduceKind::Mc => {
            let cert = reductions::cc1_certificate_coloring(phi, &a)?;
            report.detail("waste", cert.waste);
            report.detail("budget", cert.budget);
            cert.coloring
        }
    };
    report.detail("colors", coloring.num_colors());
    Ok(Some(coloring))
}

fn write_gadget(out: &str, gadget: &GadgetGraph, coloring: Option<&EdgeColoring>) -> CliResult<()> {
    write_atomic(out, &GraphDocument::from_gadget(gadget, coloring).to_json())
}

fn require_k(k: Option<usize>, kind: &str) -> CliResult<usize> {
    k.ok_or_else(|| CliError::Usage(format!("`{kind}` needs --k")))
}

fn reject_k(k: Option<usize>, kind: &str) -> CliResult<()> {
    match k {
        Some(_) => Err(CliError::Usage(format!("`{kind}` takes no --k"))),
        None => Ok(()),
    }
}

fn verify(
    report: &mut ResultDocument,
    kind: VerifyKind,
    path: &str,
    k: Option<usize>,
    witnesses: bool,
) -> CliResult<Exit> {
    let doc = read_document(report, path)?;
    let (graph, coloring) = doc.colored_graph()?;
    let (holds, pair) = match kind {
        VerifyKind::Cck => {
            let k = require_k(k, "cck")?;
            let pair = verifiers::k_color_failing_pair(&graph, &coloring, k)?;
            (pair.is_none(), pair)
        }
        _ => {
            reject_k(k, &format!("{kind:?}").to_lowercase())?;
            let verdict = match kind {
                VerifyKind::Mono => verifiers::monochromatic_connected(&graph, &coloring)?,
                VerifyKind::Proper => verifiers::properly_connected(&graph, &coloring)?,
                _ => verifiers::conflict_free_connected(&graph, &coloring)?,
            };
            if witnesses {
                report.witnesses = verdict
                    .witnesses
                    .iter()
                    .map(|w| WitnessDoc::new(&graph, w))
                    .collect();
            }
            (verdict.holds, verdict.failing_pair)
        }
    };
    report.verdict = Some(holds);
    if let Some(pair) = pair {
        report.pair(&graph, pair);
    }
    report.detail("colors", coloring.num_colors());
    Ok(if holds { Exit::Yes } else { Exit::No })
}

fn solve(
    report: &mut ResultDocument,
    kind: SolveKind,
    path: &str,
    k: Option<usize>,
    out: Option<&str>,
) -> CliResult<Exit> {
    let doc = read_document(report, path)?;
    let graph = doc.graph()?;
    let OracleSolution { value, coloring } = match kind {
        SolveKind::Cck => oracles::solve_cck(&graph, require_k(k, "cck")?)?,
        SolveKind::Pc => {
            reject_k(k, "pc")?;
            oracles::solve_pc(&graph)?
        }
        SolveKind::Cfc => {
            reject_k(k, "cfc")?;
            oracles::solve_cfc(&graph)?
        }
        SolveKind::Mc => {
            reject_k(k, "mc")?;
            oracles::solve_mc(&graph)?
        }
    };
    report.value = Some(value);
    report.set_coloring(&graph, &coloring);
    if let Some(out) = out {
        write_colored(out, &doc, &graph, &coloring)?;
    }
    Ok(Exit::Yes)
}

/// Keeps the roles and meta of the input document.
fn write_colored(
    out: &str,
    doc: &GraphDocument,
    graph: &Graph,
    coloring: &EdgeColoring,
) -> CliResult<()> {
    let mut colored = GraphDocument::from_graph(graph, Some(coloring));
    colored.roles = doc.roles.clone();
    colored.meta = doc.meta.clone();
    write_atomic(out, &colored.to_json())
}

fn tree(report: &mut ResultDocument, path: &str, k: usize) -> CliResult<Exit> {
    let doc = read_document(report, path)?;
    let graph = doc.graph()?;
    let value = tree_cck::cck_tree(&graph, k)?;
    report.value = Some(value);
    match tree_cck::cck_tree_witness(&graph, k) {
        Ok(coloring) => {
            let valid = coloring.num_colors() as usize == value
                && verifiers::is_k_color_connection(&graph, &coloring, k)?;
            report.detail("witness_valid", valid);
            report.set_coloring(&graph, &coloring);
        }
        Err(e) => report.detail("witness_error", e.to_string()),
    }
    Ok(Exit::Yes)
}
