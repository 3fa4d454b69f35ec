//! Command-line front end. Every command reads an edge list (or, for
//! `verify`, a certificate), writes a JSON report to `--output` or stdout,
//! and maps errors to exit codes: 2 parse, 3 ineligible, 4 cap exceeded,
//! 5 verification failure, 1 anything else.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::autgroup::automorphisms;
use crate::certificate::{
    break_symmetry, verify_certificate, BreakCertificate, BreakOptions, CertificateKind,
    SCHEMA_VERSION,
};
use crate::distinguish::{distinguishing_number_bounded, Coloring};
use crate::error::Result;
use crate::format::{parse_edge_list, to_dot};
use crate::graph::Graph;
use crate::linegraph::{clusters, iterate, Provenance};
use crate::treesym::{sweep, tree_report, SweepRow};
use crate::Limits;

#[derive(Debug, Parser)]
#[command(
    name = "iterline",
    version,
    about = "Distinguishing numbers of iterated line graphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Also write a Graphviz rendering to this path.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = positive_usize)]
    pub vertex_cap: usize,
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = positive_usize)]
    pub group_cap: usize,
    /// Elementary steps allowed per exhaustive search.
    #[arg(long, global = true, default_value_t = 1_000_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub work_cap: u64,
}

fn positive_usize(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate the line graph with provenance.
    Line {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Automorphism group.
    Aut {
        #[arg(long)]
        input: PathBuf,
    },
    /// Distinguishing number with a witness coloring.
    Dist {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_colors: Option<usize>,
    },
    /// Clusters of `L^{2m}(G)` over the vertices of `G`.
    Clusters {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Emit a two-color symmetry-breaking certificate.
    Break {
        #[arg(long)]
        input: PathBuf,
        /// Size clusters by an optimal coloring of the base.
        #[arg(long)]
        remark_opt: bool,
    },
    /// Re-check a stored certificate.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Tree center, branches and the increase prediction.
    Tree {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare D(T) with D(L(T)) over all trees up to a size.
    Sweep {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
}

impl Common {
    pub fn limits(&self) -> Limits {
        Limits {
            vertex_cap: self.vertex_cap,
            group_cap: self.group_cap,
            work_cap: self.work_cap,
        }
    }
}

#[derive(Serialize)]
struct LineReport<'a> {
    schema_version: u32,
    iterations: usize,
    graphs: Vec<&'a Graph>,
    links: &'a [Provenance],
}

#[derive(Serialize)]
struct AutReport<'a> {
    schema_version: u32,
    #[serde(flatten)]
    group: &'a crate::autgroup::AutGroup,
}

#[derive(Serialize)]
struct DistReport<'a> {
    schema_version: u32,
    k: usize,
    witness: &'a Coloring,
}

#[derive(Serialize)]
struct Versioned<'a, T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
struct SweepReport<'a> {
    schema_version: u32,
    max_n: usize,
    rows: &'a [SweepRow],
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Executes one command and returns its report and optional DOT text.
pub fn execute(config: &RunConfig) -> Result<(String, Option<String>)> {
    let limits = config.common.limits();
    let want_dot = config.common.dot.is_some();
    match &config.command {
        Command::Line { input, iterations } => {
            let chain = iterate(&read_graph(input)?, *iterations, &limits)?;
            let graphs = (0..=chain.len()).map(|i| chain.graph_at(i)).collect();
            let report = LineReport {
                schema_version: SCHEMA_VERSION,
                iterations: *iterations,
                graphs,
                links: chain.links(),
            };
            Ok((
                to_json(&report)?,
                want_dot.then(|| to_dot(chain.top(), None)),
            ))
        }
        Command::Aut { input } => {
            let group = automorphisms(&read_graph(input)?, &limits)?;
            let report = AutReport {
                schema_version: SCHEMA_VERSION,
                group: &group,
            };
            Ok((to_json(&report)?, None))
        }
        Command::Dist { input, max_colors } => {
            let g = read_graph(input)?;
            let (k, witness) = distinguishing_number_bounded(&g, *max_colors, &limits)?;
            let report = DistReport {
                schema_version: SCHEMA_VERSION,
                k,
                witness: &witness,
            };
            let dot = want_dot.then(|| to_dot(&g, Some(witness.colors())));
            Ok((to_json(&report)?, dot))
        }
        Command::Clusters { input, depth } => {
            let family = clusters(&read_graph(input)?, *depth, &limits)?;
            let report = Versioned {
                schema_version: SCHEMA_VERSION,
                body: &family,
            };
            Ok((
                to_json(&report)?,
                want_dot.then(|| to_dot(family.host(), Some(family_owner(&family).as_slice()))),
            ))
        }
        Command::Break { input, remark_opt } => {
            let options = BreakOptions {
                optimal_counts: *remark_opt,
            };
            let cert = break_symmetry(&read_graph(input)?, options, &limits)?;
            let dot = if want_dot {
                let host = match cert.kind {
                    CertificateKind::Direct => cert.input.clone(),
                    CertificateKind::Clusters => {
                        iterate(&cert.base, 2 * cert.r, &limits)?.top().clone()
                    }
                };
                Some(to_dot(&host, Some(cert.coloring().colors())))
            } else {
                None
            };
            Ok((to_json(&cert)?, dot))
        }
        Command::Verify { input } => {
            let cert = BreakCertificate::from_json(&fs::read_to_string(input)?)?;
            let report = verify_certificate(&cert, &limits)?;
            let body = Versioned {
                schema_version: SCHEMA_VERSION,
                body: &report,
            };
            Ok((to_json(&body)?, None))
        }
        Command::Tree { input } => {
            let t = read_graph(input)?;
            let report = tree_report(&t, &limits)?;
            let dot = want_dot.then(|| to_dot(&t, Some(report.witness_tree.colors())));
            Ok((to_json(&report)?, dot))
        }
        Command::Sweep { max_n } => {
            let rows = sweep(*max_n, &limits)?;
            let report = SweepReport {
                schema_version: SCHEMA_VERSION,
                max_n: *max_n,
                rows: &rows,
            };
            Ok((to_json(&report)?, None))
        }
    }
}

/// Owner of every host vertex, shifted to start at 1 for DOT colors.
fn family_owner(family: &crate::linegraph::ClusterFamily) -> Vec<usize> {
    (0..family.host().n())
        .map(|z| family.owner(z) + 1)
        .collect()
}

fn emit(config: &RunConfig, report: &str, dot: Option<&str>) -> Result<()> {
    match &config.common.output {
        Some(path) => fs::write(path, report)?,
        None => print!("{report}"),
    }
    if let (Some(path), Some(dot)) = (&config.common.dot, dot) {
        fs::write(path, dot)?;
    }
    Ok(())
}

/// Runs a parsed configuration and returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.common.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let outcome = pool
        .install(|| execute(config))
        .and_then(|(report, dot)| emit(config, &report, dot.as_deref()));
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            e.exit_code()
        }
    }
}

/// Parses process arguments and runs; usage errors exit with code 2.
pub fn main_entry() -> i32 {
    match RunConfig::try_parse() {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("iterline").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_parse() {
        let c = parse(&[
            "break",
            "--input",
            "g.txt",
            "--remark-opt",
            "--vertex-cap",
            "50",
            "--threads",
            "2",
        ]);
        assert!(matches!(
            c.command,
            Command::Break {
                remark_opt: true,
                ..
            }
        ));
        assert_eq!(c.common.limits().vertex_cap, 50);
        assert_eq!(c.common.limits().work_cap, 1_000_000_000);
        let s = parse(&["sweep", "--max-n", "7", "--output", "out.json"]);
        assert!(matches!(s.command, Command::Sweep { max_n: 7 }));
    }

    #[test]
    fn caps_must_be_positive() {
        assert!(
            RunConfig::try_parse_from(["iterline", "aut", "--input", "x", "--group-cap", "0"])
                .is_err()
        );
        assert!(
            RunConfig::try_parse_from(["iterline", "aut", "--input", "x", "--work-cap", "0"])
                .is_err()
        );
    }

    #[test]
    fn missing_input_is_a_usage_error() {
        assert!(RunConfig::try_parse_from(["iterline", "dist"]).is_err());
    }
}
