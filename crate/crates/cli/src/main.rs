//! `hyperlayer` command-line front end.
//!
//! Ground-set points in `--fix` are 1-based, matching `[n]`; vertex
//! indices in edge lists and partition files are 0-based.

mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hyperlayer::verify::{verify_sweep, VerifyOptions, DEFAULT_CAP, MIN_N};
use hyperlayer::{
    coarsest_equitable_refinement, orbit_partition, quotient_matrix, quotient_spectrum, spectrum,
    stabilizer_generators, Error, GeneratorSet, Graph, Partition, Permutation,
};
use serde_json::json;

use crate::spec::{labels_path, parse_fix, parse_pair, GraphSpec};

#[derive(Parser, Debug)]
#[command(
    name = "hyperlayer",
    version,
    about = "Exact spectra of hypercube layer graphs and their line graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Edges,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph as an edge list or JSON.
    Gen {
        /// q:<n>, q-layer:<n>,<i>, h:<n>, l:<n> or file:<path>
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
        /// Output file; the graph goes to stdout when omitted. Labels are
        /// written next to edge lists as <out>.labels.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the exact spectrum (integer eigenvalues and residual polynomial).
    Spectrum {
        #[arg(long)]
        graph: GraphSpec,
    },
    /// Print the orbit partition of a permutation group acting on the vertices.
    Orbits {
        #[arg(long)]
        graph: GraphSpec,
        /// 1-based ground points fixed by the lifted group on L(n), e.g. 1,2 or ∅
        #[arg(long, conflicts_with = "perms")]
        fix: Option<String>,
        /// File of vertex permutations in 1-based cycle notation, one per line
        #[arg(long)]
        perms: Option<PathBuf>,
    },
    /// Print the quotient matrix of an equitable partition and its spectrum.
    Quotient {
        #[arg(long)]
        graph: GraphSpec,
        /// 1-based ground points fixed by the lifted group on L(n)
        #[arg(long, conflicts_with = "partition")]
        fix: Option<String>,
        /// JSON array of 0-based cells (inline or a file path), or
        /// `equitable` for the coarsest equitable partition
        #[arg(long)]
        partition: Option<String>,
    },
    /// Run every check on L(n) for n in [from, to]; exit 0 iff all pass.
    Verify {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Negative-control hook: toggle the adjacency u,v of L(n).
        #[arg(long, hide = true, num_args = 0..=1, default_missing_value = "0,1")]
        mutate_edge: Option<String>,
    },
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn graph_json(g: &Graph) -> serde_json::Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    let labels: Option<Vec<String>> = g
        .labels()
        .map(|ls| ls.iter().map(|l| l.to_string()).collect());
    json!({ "vertex_count": g.vertex_count(), "edges": edges, "labels": labels })
}

fn cmd_gen(spec: &GraphSpec, format: GraphFormat, out: Option<&PathBuf>) -> Result<ExitCode> {
    let g = spec.build()?;
    let body = match format {
        GraphFormat::Edges => g.to_edge_list(),
        GraphFormat::Json => format!("{}\n", serde_json::to_string(&graph_json(&g))?),
    };
    match out {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
            if let (GraphFormat::Edges, Some(labels)) = (format, g.labels_json()) {
                let sidecar = labels_path(path);
                std::fs::write(&sidecar, labels)
                    .with_context(|| format!("writing {}", sidecar.display()))?;
            }
            print_json(&json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }));
        }
        None => print!("{body}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(spec: &GraphSpec) -> Result<ExitCode> {
    let g = spec.build()?;
    print_json(&serde_json::to_value(spectrum(&g)?)?);
    Ok(ExitCode::SUCCESS)
}

fn stabilizer_orbits(spec: &GraphSpec, fix: &str) -> Result<Partition> {
    let Some(n) = spec.l_order() else {
        bail!("--fix applies only to l:<n>; use --perms for other graphs");
    };
    let fixed = parse_fix(fix)?;
    if let Some(p) = fixed.iter().find(|&&p| p == 0 || p > n) {
        bail!("fixed point {p} outside 1..={n}");
    }
    Ok(orbit_partition(&stabilizer_generators(n, &fixed)?))
}

fn read_generators(path: &PathBuf, degree: usize) -> Result<GeneratorSet> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let gens = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Permutation::parse_cycles(l, degree))
        .collect::<hyperlayer::Result<Vec<_>>>()?;
    Ok(GeneratorSet::new(degree, gens)?)
}

fn cmd_orbits(spec: &GraphSpec, fix: Option<&str>, perms: Option<&PathBuf>) -> Result<ExitCode> {
    let g = spec.build()?;
    let orbits = match (fix, perms) {
        (_, Some(path)) => orbit_partition(&read_generators(path, g.vertex_count())?),
        (fix, None) => stabilizer_orbits(spec, fix.unwrap_or(""))?,
    };
    print_json(&json!({ "cells": orbits, "cell_sizes": orbits.cell_sizes() }));
    Ok(ExitCode::SUCCESS)
}

fn load_partition(arg: &str, g: &Graph) -> Result<Partition> {
    let arg = arg.trim();
    if arg == "equitable" {
        return Ok(coarsest_equitable_refinement(
            g,
            &Partition::unit(g.vertex_count()),
        )?);
    }
    let json = if arg.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    Ok(Partition::from_json(&json, g.vertex_count())?)
}

fn cmd_quotient(spec: &GraphSpec, fix: Option<&str>, partition: Option<&str>) -> Result<ExitCode> {
    let g = spec.build()?;
    let pi = match (fix, partition) {
        (_, Some(arg)) => load_partition(arg, &g)?,
        (Some(fix), None) => stabilizer_orbits(spec, fix)?,
        (None, None) => bail!("give --fix or --partition"),
    };
    match quotient_matrix(&g, &pi) {
        Ok(q) => {
            let spectrum = quotient_spectrum(&q)?;
            print_json(&json!({ "quotient": q, "spectrum": spectrum }));
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::NotEquitable {
            first,
            second,
            cell,
        }) => {
            print_json(&json!({
                "error": "partition is not equitable",
                "witness": { "vertices": [first, second], "cell": cell },
            }));
            Ok(ExitCode::FAILURE)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify(from: usize, to: usize, cap: usize, mutate: Option<&str>) -> Result<ExitCode> {
    if from < MIN_N || from > to || to > cap {
        bail!("need {MIN_N} <= from <= to <= cap (cap = {cap}), got from = {from}, to = {to}");
    }
    let opts = VerifyOptions {
        mutate_edge: mutate.map(parse_pair).transpose()?,
        exec: None,
    };
    let reports = verify_sweep(from..=to, opts)?;
    let ok = reports.iter().all(|r| r.overall);
    for r in &reports {
        for c in r.failed() {
            eprintln!("n = {}: check {} failed", r.n, c.name);
        }
    }
    print_json(&serde_json::to_value(&reports)?);
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { graph, format, out } => cmd_gen(&graph, format, out.as_ref()),
        Command::Spectrum { graph } => cmd_spectrum(&graph),
        Command::Orbits { graph, fix, perms } => cmd_orbits(&graph, fix.as_deref(), perms.as_ref()),
        Command::Quotient {
            graph,
            fix,
            partition,
        } => cmd_quotient(&graph, fix.as_deref(), partition.as_deref()),
        Command::Verify {
            from,
            to,
            cap,
            mutate_edge,
        } => cmd_verify(from, to, cap, mutate_edge.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
