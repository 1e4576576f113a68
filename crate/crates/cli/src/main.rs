//! Command-line front end: file ingestion, JSON reporting, and the one-shot
//! verification driver.
//!
//! Every subcommand prints a single JSON document to stdout. Exit status is
//! zero iff all requested checks passed and no input failed to parse;
//! reports are byte-identical across runs with the same arguments except
//! for `*_ms` timing fields.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tourtile::constructions;
use tourtile::enumerate::{self, RamseyOutcome, RamseyTable};
use tourtile::exec;
use tourtile::fractional::{self, SweepMode, TilingHypergraph};
use tourtile::graph::{InnerPolicy, OrientedGraph, Tournament, VertexSet};
use tourtile::rational;
use tourtile::reproduce::{self, ReproduceConfig};
use tourtile::tiling::{self, TilingWitness};

#[derive(Parser)]
#[command(
    name = "tourtile",
    version,
    about = "Decide, construct, and certify tilings of oriented graphs by transitive tournaments"
)]
struct Cli {
    /// Worker threads (default: the TOURTILE_WORKERS variable, else all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    /// Every class.
    All,
    /// Classes with no transitive subtournament of order k.
    TkFree,
    /// Classes with a perfect tiling by transitive k-sets.
    Tileable,
    /// Classes without a perfect tiling by transitive k-sets.
    Untileable,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Degree-threshold extremal blow-up (k, n, gamma).
    Ex34,
    /// Tournament with a vertex in no transitive k-set (k = 4).
    Ex35,
    /// Fractional-minimum blow-up (k, n).
    Ex39,
    /// Edge-maximal free blow-up (k, n).
    Turan,
    /// Semidegree-threshold extremal graph (k | n).
    Gnk,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Inner {
    Independent,
    Transitive,
    SeededRandom,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a wire-format file and report per-line degree statistics.
    Parse {
        /// Vertex count (supplied out of band by the wire format).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Decide perfect tilings for each tournament in a file.
    Tile {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
        /// Also write the witnesses to this path as JSON.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact fractional matching/cover optima with full certificates.
    Frac {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Minimum of nu* over an order: exhaustive, or sampled when --samples
    /// is given.
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: Option<usize>,
        /// Required with --samples.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Smallest order at which every tournament contains a transitive
    /// k-subtournament.
    Ramsey {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Generate all isomorphism classes on n vertices and filter.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Predicate::All)]
        predicate: Predicate,
        /// Order parameter for the predicate (required except for `all`).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit one of the extremal constructions.
    Construct {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Blow-up deficit as "p/q" (ex34 only; defaults to 1/n).
        #[arg(long)]
        gamma: Option<String>,
        /// Seed for the seeded-random inner policy.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Inner::Transitive)]
        inner: Inner,
        /// Also write the JSON document to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form bound sheet for k.
    Bounds {
        #[arg(long)]
        k: usize,
        /// Size of the largest free regular tournament, if the caller has
        /// one; enables the semidegree threshold.
        #[arg(long)]
        reg: Option<u64>,
        /// Substitute 2^(j-1) for missing Ramsey values.
        #[arg(long)]
        upper_bound_mode: bool,
    },
    /// Find linking sets on 13-vertex instances (anchors x = 0, y = 1,
    /// T = the rest).
    Linking {
        /// Wire-format file of 13-vertex tournaments.
        #[arg(long, conflicts_with = "seed")]
        input: Option<PathBuf>,
        /// Generate seeded random instances instead.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Validate a 12-vertex catalog file: parse, untileability, pairwise
    /// non-isomorphism, exact fractional optima.
    VerifyAppendix {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the full verification checklist.
    Reproduce {
        /// Run every check (the default and only mode).
        #[arg(long)]
        all: bool,
        /// Seed for the sampled checks (mandatory: reports must be
        /// reproducible).
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "data/appendix.txt")]
        appendix: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let workers = cli.workers.or_else(|| {
        std::env::var("TOURTILE_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    exec::configure_workers(workers);
    match run(cli.command) {
        Ok(all_passed) => std::process::exit(if all_passed { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Reads a wire-format file: one tournament per line, blank lines skipped.
fn read_wire_file(path: &Path, n: usize) -> Result<Vec<(usize, Result<Tournament, String>)>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| {
            (
                line,
                Tournament::from_upper_triangle(l, n).map_err(|e| e.to_string()),
            )
        })
        .collect())
}

#[derive(Serialize)]
struct GraphDocument {
    n: usize,
    complete: bool,
    /// Upper-triangle encoding; only tournaments have one.
    wire: Option<String>,
    edges: Vec<(usize, usize)>,
    min_out: usize,
    min_in: usize,
    min_semi: usize,
    min_total: usize,
}

impl GraphDocument {
    fn from_graph(g: &OrientedGraph) -> Self {
        let rep = g.degree_report();
        GraphDocument {
            n: g.n(),
            complete: g.is_complete(),
            wire: g.to_upper_triangle().ok(),
            edges: g.edges(),
            min_out: rep.min_out,
            min_in: rep.min_in,
            min_semi: rep.min_semi,
            min_total: rep.min_total,
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Parse { n, input } => {
            #[derive(Serialize)]
            struct Line {
                line: usize,
                ok: bool,
                error: Option<String>,
                wire: Option<String>,
                min_out: Option<usize>,
                min_in: Option<usize>,
                min_semi: Option<usize>,
                min_total: Option<usize>,
            }
            let rows: Vec<Line> = read_wire_file(&input, n)?
                .into_iter()
                .map(|(line, parsed)| match parsed {
                    Ok(t) => {
                        let rep = t.degree_report();
                        Line {
                            line,
                            ok: true,
                            error: None,
                            wire: Some(t.to_upper_triangle()),
                            min_out: Some(rep.min_out),
                            min_in: Some(rep.min_in),
                            min_semi: Some(rep.min_semi),
                            min_total: Some(rep.min_total),
                        }
                    }
                    Err(e) => Line {
                        line,
                        ok: false,
                        error: Some(e),
                        wire: None,
                        min_out: None,
                        min_in: None,
                        min_semi: None,
                        min_total: None,
                    },
                })
                .collect();
            let all_ok = rows.iter().all(|r| r.ok);
            emit(&rows)?;
            Ok(all_ok)
        }
        Command::Tile {
            k,
            n,
            input,
            witness,
        } => {
            #[derive(Serialize)]
            struct Row {
                line: usize,
                error: Option<String>,
                tileable: Option<bool>,
                witness: Option<TilingWitness>,
            }
            let mut rows = Vec::new();
            let mut all_ok = true;
            for (line, parsed) in read_wire_file(&input, n)? {
                match parsed {
                    Ok(t) => {
                        let w = tiling::has_perfect_tiling(t.as_graph(), k)?;
                        rows.push(Row {
                            line,
                            error: None,
                            tileable: Some(w.is_some()),
                            witness: w,
                        });
                    }
                    Err(e) => {
                        all_ok = false;
                        rows.push(Row {
                            line,
                            error: Some(e),
                            tileable: None,
                            witness: None,
                        });
                    }
                }
            }
            if let Some(path) = witness {
                std::fs::write(&path, serde_json::to_string_pretty(&rows)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&rows)?;
            Ok(all_ok)
        }
        Command::Frac { k, n, input } => {
            #[derive(Serialize)]
            struct Row {
                line: usize,
                error: Option<String>,
                nu_star: Option<String>,
                tau_star: Option<String>,
                primal: Option<serde_json::Value>,
                dual: Option<serde_json::Value>,
            }
            let mut rows = Vec::new();
            let mut all_ok = true;
            for (line, parsed) in read_wire_file(&input, n)? {
                match parsed {
                    Ok(t) => {
                        let h = TilingHypergraph::from_graph(t.as_graph(), k);
                        let (nu, cert) = fractional::nu_star(&h);
                        let (tau, _) = fractional::tau_star(&h);
                        let primal: Vec<(Vec<usize>, String)> = h
                            .edges()
                            .iter()
                            .zip(&cert.edge_weights)
                            .filter(|(_, w)| !rational::is_zero(w))
                            .map(|(e, w)| (e.to_vec(), rational::to_pq(w)))
                            .collect();
                        let dual: Vec<String> =
                            cert.vertex_weights.iter().map(rational::to_pq).collect();
                        rows.push(Row {
                            line,
                            error: None,
                            nu_star: Some(rational::to_pq(&nu)),
                            tau_star: Some(rational::to_pq(&tau)),
                            primal: Some(serde_json::to_value(primal)?),
                            dual: Some(serde_json::to_value(dual)?),
                        });
                    }
                    Err(e) => {
                        all_ok = false;
                        rows.push(Row {
                            line,
                            error: Some(e),
                            nu_star: None,
                            tau_star: None,
                            primal: None,
                            dual: None,
                        });
                    }
                }
            }
            emit(&rows)?;
            Ok(all_ok)
        }
        Command::Sweep {
            k,
            n,
            samples,
            seed,
        } => {
            let mode = match samples {
                None => SweepMode::Exhaustive,
                Some(samples) => {
                    let seed =
                        seed.context("--seed is required with --samples for reproducibility")?;
                    SweepMode::Sampled { samples, seed }
                }
            };
            let report = fractional::min_nu_star_sweep(n, k, mode)?;
            emit(&report)?;
            Ok(true)
        }
        Command::Ramsey { k, n_max } => {
            #[derive(Serialize)]
            struct Report {
                k: usize,
                n_max: usize,
                value: Option<usize>,
                witness: Option<String>,
                witness_n: Option<usize>,
                wall_ms: u128,
            }
            let started = Instant::now();
            let outcome = enumerate::find_ramsey(k, n_max)?;
            let report = match outcome {
                RamseyOutcome::Found { value, witness } => Report {
                    k,
                    n_max,
                    value: Some(value),
                    witness_n: Some(witness.n()),
                    witness: Some(witness.to_upper_triangle()),
                    wall_ms: started.elapsed().as_millis(),
                },
                RamseyOutcome::ExceedsCap { n_max } => Report {
                    k,
                    n_max,
                    value: None,
                    witness: None,
                    witness_n: None,
                    wall_ms: started.elapsed().as_millis(),
                },
            };
            emit(&report)?;
            Ok(report.value.is_some())
        }
        Command::Enumerate { n, predicate, k } => {
            #[derive(Serialize)]
            struct SearchReport {
                n: usize,
                predicate: String,
                classes_examined: usize,
                classes_satisfying: usize,
                witnesses: Vec<String>,
                wall_ms: u128,
            }
            let started = Instant::now();
            let classes = enumerate::generate_tournaments(n)?;
            let (name, satisfying): (String, Vec<&Tournament>) = match predicate {
                Predicate::All => ("all".into(), classes.iter().collect()),
                Predicate::TkFree => {
                    let k = k.context("--k is required for tk-free")?;
                    (
                        format!("t{k}-free"),
                        classes
                            .iter()
                            .filter(|t| !t.contains_transitive(k))
                            .collect(),
                    )
                }
                Predicate::Tileable | Predicate::Untileable => {
                    let k = k.context("--k is required for tiling predicates")?;
                    let want = predicate == Predicate::Tileable;
                    let name = if want {
                        format!("t{k}-tileable")
                    } else {
                        format!("t{k}-untileable")
                    };
                    let picked = classes
                        .iter()
                        .map(|t| {
                            tiling::has_perfect_tiling(t.as_graph(), k).map(|w| w.is_some() == want)
                        })
                        .collect::<Result<Vec<bool>, _>>()?;
                    (
                        name,
                        classes
                            .iter()
                            .zip(picked)
                            .filter(|(_, p)| *p)
                            .map(|(t, _)| t)
                            .collect(),
                    )
                }
            };
            let report = SearchReport {
                n,
                predicate: name,
                classes_examined: classes.len(),
                classes_satisfying: satisfying.len(),
                witnesses: satisfying.iter().map(|t| t.to_upper_triangle()).collect(),
                wall_ms: started.elapsed().as_millis(),
            };
            emit(&report)?;
            Ok(true)
        }
        Command::Construct {
            which,
            k,
            n,
            gamma,
            seed,
            inner,
            out,
        } => {
            let inner_policy = match inner {
                Inner::Independent => InnerPolicy::Independent,
                Inner::Transitive => InnerPolicy::Transitive,
                Inner::SeededRandom => InnerPolicy::SeededRandom(seed.unwrap_or(0)),
            };
            let graph = match which {
                Which::Ex34 => {
                    let k = k.context("--k is required")?;
                    let n = n.context("--n is required")?;
                    let gamma = match gamma {
                        Some(text) => rational::parse_pq(&text)
                            .with_context(|| format!("bad --gamma value: {text}"))?,
                        None => rational::ratio(1, n as i64),
                    };
                    constructions::min_degree_extremal(k, n, &gamma, inner_policy)?
                }
                Which::Ex35 => {
                    let k = k.context("--k is required")?;
                    let (t, _) = constructions::unextendable_vertex_tournament(k)?;
                    t.into_graph()
                }
                Which::Ex39 => {
                    let k = k.context("--k is required")?;
                    let n = n.context("--n is required")?;
                    constructions::fractional_minimizer_blowup(k, n, inner_policy)?.into_graph()
                }
                Which::Turan => {
                    let k = k.context("--k is required")?;
                    let n = n.context("--n is required")?;
                    constructions::turan_extremal(k, n)?
                }
                Which::Gnk => {
                    let k = k.context("--k is required")?;
                    let n = n.context("--n is required")?;
                    constructions::semidegree_extremal(n, k)?
                }
            };
            let doc = GraphDocument::from_graph(&graph);
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&doc)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&doc)?;
            Ok(true)
        }
        Command::Bounds {
            k,
            reg,
            upper_bound_mode,
        } => {
            let sheet =
                constructions::bound_sheet(k, &RamseyTable::constants(), reg, upper_bound_mode)?;
            emit(&sheet)?;
            Ok(true)
        }
        Command::Linking { input, seed, count } => {
            #[derive(Serialize)]
            struct Row {
                instance: usize,
                wire: String,
                error: Option<String>,
                z: Option<VertexSet>,
                x_witness: Option<TilingWitness>,
                y_witness: Option<TilingWitness>,
            }
            let instances: Vec<(usize, Tournament)> = match (input, seed) {
                (Some(path), _) => read_wire_file(&path, 13)?
                    .into_iter()
                    .map(|(line, parsed)| {
                        parsed
                            .map(|t| (line, t))
                            .map_err(|e| anyhow::anyhow!("line {line}: {e}"))
                    })
                    .collect::<Result<_>>()?,
                (None, Some(seed)) => Tournament::seeded_batch(13, count, seed)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, t)| (i + 1, t))
                    .collect(),
                (None, None) => bail!("provide --input FILE or --seed X"),
            };
            let t_set = VertexSet::from_iter(2..13);
            let mut rows = Vec::new();
            let mut all_ok = true;
            for (instance, t) in instances {
                match tiling::find_linking_set(t.as_graph(), 0, 1, t_set) {
                    Ok(link) => rows.push(Row {
                        instance,
                        wire: t.to_upper_triangle(),
                        error: None,
                        z: Some(link.z),
                        x_witness: Some(link.x_witness),
                        y_witness: Some(link.y_witness),
                    }),
                    Err(e) => {
                        all_ok = false;
                        rows.push(Row {
                            instance,
                            wire: t.to_upper_triangle(),
                            error: Some(e.to_string()),
                            z: None,
                            x_witness: None,
                            y_witness: None,
                        });
                    }
                }
            }
            emit(&rows)?;
            Ok(all_ok)
        }
        Command::VerifyAppendix { input } => {
            let report = tiling::verify_appendix(&input)?;
            let ok = report.count > 0
                && report.all_untileable
                && report.pairwise_nonisomorphic
                && report.entries.iter().all(|e| e.parse_error.is_none());
            emit(&report)?;
            Ok(ok)
        }
        Command::Reproduce {
            all: _,
            seed,
            appendix,
        } => {
            let report = reproduce::run_all(&ReproduceConfig {
                seed,
                appendix_path: appendix,
            });
            emit(&report)?;
            Ok(report.all_passed)
        }
    }
}
