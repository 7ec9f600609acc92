//! Command-line surface for the graph configuration-space toolkit.
//!
//! Every subcommand reads a graph document from a file, writes a single
//! JSON value to stdout, and keeps diagnostics on stderr. Exit codes:
//! 0 success, 1 domain or usage error, 2 refused by a resource guard.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use gbt_core::complex::CubeComplex;
use gbt_core::moves::{build_epsilon, q_project, DiscreteConfiguration};
use gbt_core::partitions::BinaryWPartition;
use gbt_core::tc::{evaluate, TCQuery};
use gbt_core::verifier::{verify_all, verify_proposition, DEFAULT_VERIFY_ALL_LIMIT};
use gbt_core::{Error, Graph};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gbt",
    version,
    about = "Configuration spaces of graphs: subdivisions, exchange loops, \
             homomorphism verification, homology, and topological complexity"
)]
struct Cli {
    /// Indent the JSON output for human readers.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report vertex valences, essential vertices, and first Betti number.
    Analyze {
        /// Graph document (JSON).
        graph: PathBuf,
    },
    /// Print a subdivided copy of the graph.
    Subdivide {
        graph: PathBuf,
        #[command(flatten)]
        rule: SubdivideRule,
    },
    /// Build the exchange loop of a particle pair at an essential vertex
    /// and project it to a word.
    Epsilon {
        graph: PathBuf,
        /// Essential vertex hosting the exchange.
        #[arg(long)]
        vertex: String,
        /// The two particle indices, comma-separated (e.g. 1,2).
        #[arg(long)]
        pair: String,
    },
    /// Check the component-word matrix of the loop homomorphisms against
    /// its expected pattern.
    Verify {
        graph: PathBuf,
        /// Total particle count; must equal twice the number of vertices
        /// in the witness set.
        #[arg(long)]
        k: usize,
        /// Witness vertices, comma-separated; defaults to the first k/2
        /// essential vertices.
        #[arg(long, value_name = "V1,V2,...")]
        w: Option<String>,
        /// Check every ordered pair of binary partitions over the witness
        /// set (the default mode).
        #[arg(long, conflicts_with_all = ["lambda", "mu"])]
        all_pairs: bool,
        /// Single partition pair: the loop-side partition, e.g. "u:{1,2} w:{3,4}".
        #[arg(long, requires = "mu")]
        lambda: Option<String>,
        /// Single partition pair: the detection-side partition.
        #[arg(long, requires = "lambda")]
        mu: Option<String>,
    },
    /// Betti numbers of the discretized configuration complex.
    Homology {
        graph: PathBuf,
        /// Number of particles.
        #[arg(long)]
        k: usize,
        /// Build the labeled (ordered) complex.
        #[arg(long, conflicts_with = "unordered")]
        ordered: bool,
        /// Build the unlabeled (unordered) complex.
        #[arg(long)]
        unordered: bool,
        /// Stop the Betti computation at this dimension.
        #[arg(long, value_name = "D")]
        max_dim: Option<usize>,
    },
    /// Topological complexity TC_r of the k-particle configuration space.
    Tc {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Attach verifier and homology certificates for the lower bound.
        #[arg(long)]
        certify: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SubdivideRule {
    /// Star-separating rules: subdivide just enough that essential
    /// vertices have pairwise disjoint closed stars with embedded arms.
    #[arg(long)]
    paper: bool,
    /// Uniform rule: split every edge into K+1 pieces, sufficient for K
    /// particles.
    #[arg(long, value_name = "K")]
    abrams: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_ok = matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            );
            let _ = e.print();
            return if usage_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    let pretty = cli.pretty;
    match execute(cli.command, pretty) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceGuard { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read `{}`: {e}", path.display())))?;
    Graph::from_json(&text)
}

fn emit(value: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("output serializes");
    println!("{text}");
}

fn parse_pair(text: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = text.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(Error::Parse(format!(
            "expected two comma-separated particle indices, got `{text}`"
        )));
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("`{s}` is not a particle index")))
    };
    Ok((parse(a)?, parse(b)?))
}

fn execute(command: Command, pretty: bool) -> Result<(), Error> {
    match command {
        Command::Analyze { graph } => {
            let g = load_graph(&graph)?;
            let essential = g.essential_vertices();
            let valences: Result<Vec<(String, usize)>, Error> = g
                .vertices()
                .map(|v| Ok((v.to_string(), g.valence(v)?)))
                .collect();
            let valences: serde_json::Map<String, Value> = valences?
                .into_iter()
                .map(|(v, d)| (v, Value::from(d)))
                .collect();
            emit(
                &json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "connected": g.is_connected(),
                    "m": essential.len(),
                    "essential_vertices": essential,
                    "valences": valences,
                    "first_betti": g.first_betti(),
                }),
                pretty,
            );
        }
        Command::Subdivide { graph, rule } => {
            let g = load_graph(&graph)?;
            let refined = match rule.abrams {
                Some(k) => g.abrams_subdivide(k)?,
                None => g.paper_subdivide()?,
            };
            let doc: Value =
                serde_json::from_str(&refined.to_json()).expect("graph serializes");
            emit(&doc, pretty);
        }
        Command::Epsilon {
            graph,
            vertex,
            pair,
        } => {
            let g = load_graph(&graph)?;
            let pair = parse_pair(&pair)?;
            let (work, subdivided) = match epsilon_report(&g, &vertex, pair) {
                Err(Error::ArmsNotDisjoint(..)) => {
                    eprintln!(
                        "note: star arms at `{vertex}` overlap; running on the \
                         star-separating subdivision"
                    );
                    (g.paper_subdivide()?, true)
                }
                other => {
                    emit(&other?, pretty);
                    return Ok(());
                }
            };
            let mut report = epsilon_report(&work, &vertex, pair)?;
            report["subdivided"] = Value::from(subdivided);
            emit(&report, pretty);
        }
        Command::Verify {
            graph,
            k,
            w,
            all_pairs: _,
            lambda,
            mu,
        } => {
            let g = load_graph(&graph)?;
            let value = match (lambda, mu) {
                (Some(lambda), Some(mu)) => {
                    let lam = BinaryWPartition::parse(&lambda)?;
                    let mu = BinaryWPartition::parse(&mu)?;
                    if lam.k() != k {
                        return Err(Error::InvalidQuery(format!(
                            "--k {k} does not match the partition, which covers {} particles",
                            lam.k()
                        )));
                    }
                    let report = with_separated_stars(&g, |work| {
                        verify_proposition(work, &lam, &mu)
                    })?;
                    serde_json::to_value(&report).expect("report serializes")
                }
                _ => {
                    let w_set = witness_vertices(&g, k, w.as_deref())?;
                    let summary = with_separated_stars(&g, |work| {
                        verify_all(work, &w_set, DEFAULT_VERIFY_ALL_LIMIT)
                    })?;
                    serde_json::to_value(&summary).expect("summary serializes")
                }
            };
            emit(&value, pretty);
        }
        Command::Homology {
            graph,
            k,
            ordered,
            unordered: _,
            max_dim,
        } => {
            let g = load_graph(&graph)?;
            let complex = CubeComplex::build(&g, k, ordered)?;
            let betti = match max_dim {
                Some(d) => complex.betti_up_to(d),
                None => complex.betti(),
            };
            emit(
                &json!({
                    "k": k,
                    "ordered": ordered,
                    "cell_counts": complex.cell_counts(),
                    "total_cells": complex.total_cells(),
                    "euler_characteristic": complex.euler_characteristic(),
                    "betti": betti.0,
                }),
                pretty,
            );
        }
        Command::Tc {
            graph,
            k,
            r,
            certify,
        } => {
            let g = load_graph(&graph)?;
            let result = evaluate(&g, TCQuery { k, r }, certify)?;
            emit(
                &serde_json::to_value(&result).expect("result serializes"),
                pretty,
            );
        }
    }
    Ok(())
}

/// The witness set for exhaustive verification: explicit names, or the
/// first k/2 essential vertices.
fn witness_vertices(g: &Graph, k: usize, w: Option<&str>) -> Result<Vec<String>, Error> {
    match w {
        Some(list) => Ok(list
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect()),
        None => {
            if !k.is_multiple_of(2) {
                return Err(Error::InvalidQuery(format!(
                    "--k {k} is odd; verification pairs up particles, so k must be 2·|W|"
                )));
            }
            let essential = g.essential_vertices();
            if essential.len() < k / 2 {
                return Err(Error::InvalidQuery(format!(
                    "graph has {} essential vertices, fewer than the k/2 = {} the witness \
                     set needs",
                    essential.len(),
                    k / 2
                )));
            }
            Ok(essential[..k / 2].iter().map(|v| v.to_string()).collect())
        }
    }
}

/// Runs `op` on the graph, retrying once on the star-separating
/// subdivision when overlapping stars or non-embedded arms get in the way.
fn with_separated_stars<T>(
    g: &Graph,
    op: impl Fn(&Graph) -> Result<T, Error>,
) -> Result<T, Error> {
    match op(g) {
        Err(Error::StarOverlap(a, b)) => {
            eprintln!(
                "note: closed stars of `{a}` and `{b}` overlap; running on the \
                 star-separating subdivision"
            );
            op(&g.paper_subdivide()?)
        }
        Err(Error::ArmsNotDisjoint(v, why)) => {
            eprintln!(
                "note: star arms at `{v}` are not disjoint ({why}); running on the \
                 star-separating subdivision"
            );
            op(&g.paper_subdivide()?)
        }
        other => other,
    }
}

/// Builds the exchange loop at `vertex` for `pair`, parks any remaining
/// particles deterministically, and projects the loop to its word.
fn epsilon_report(g: &Graph, vertex: &str, pair: (usize, usize)) -> Result<Value, Error> {
    let (i, j) = pair;
    if i == 0 || j == 0 {
        return Err(Error::InvalidQuery("particle indices are 1-based".into()));
    }
    let emb = g.star_embedding(vertex)?;
    let k = i.max(j);
    let mut positions = vec![String::new(); k];
    positions[i - 1] = emb.arm(0).boundary.clone();
    positions[j - 1] = emb.arm(1).boundary.clone();
    let star = g.closed_star_vertices(vertex)?;
    let mut spots = g
        .vertices()
        .filter(|v| !star.contains(v) && !g.is_essential(v).unwrap_or(true));
    for slot in positions.iter_mut().filter(|s| s.is_empty()) {
        let Some(spot) = spots.next() else {
            return Err(Error::InvalidQuery(format!(
                "not enough free non-essential vertices outside the star of `{vertex}` to \
                 park {} particles",
                k - 2
            )));
        };
        *slot = spot.to_string();
    }
    let base = DiscreteConfiguration::new(positions)?;
    let spec = build_epsilon(g, &emb, pair, &base)?;
    let word = q_project(g, &spec, pair, vertex)?;
    Ok(json!({
        "vertex": vertex,
        "pair": [i, j],
        "k": k,
        "base": base.positions(),
        "moves": spec.moves().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "word": word.to_string(),
        "trivial": word.is_trivial(),
    }))
}
