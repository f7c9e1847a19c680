//! `cfc`: conflict-free colourings from the command line.
//!
//! Exit codes: 0 success (and "yes" for `verify` / `check-berge`), 1 "no"
//! for `verify` / `check-berge`, 2 invalid input, 3 budget exceeded,
//! 4 rounding aborted.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use cfc_core::graph::{full_hole_cap, is_berge};
use cfc_core::io::{
    colouring_json, cooccurrence_dot, general_instance_json, interval_instance_json, parse_colouring, parse_instance,
    parse_representatives, read_dimacs, write_dimacs, Instance,
};
use cfc_core::oracles::{random_hypergraph, random_interval_hypergraph};
use cfc_core::solver::Certificate;
use cfc_core::{
    build_conflict_graph, build_cooccurrence, chi_cf_bruteforce, colouring_from_partition,
    min_ehs_partition_bruteforce, partition_from_colouring, solve, verify_cf, Budgets, Error, IntervalHypergraph,
    OracleBudget, Part,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cfc", version, about = "Minimum conflict-free colourings of hypergraphs")]
struct Cli {
    /// TOML file overriding search budgets.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimal colouring of an interval instance, as JSON.
    Solve {
        /// Instance file, `-` for stdin.
        instance: PathBuf,
    },
    /// Checks a colouring; exit 0 if conflict-free, 1 if not.
    Verify { instance: PathBuf, colouring: PathBuf },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
    /// Complement of the conflict graph G_k in DIMACS; its maximum cliques
    /// are the maximum independent sets of G_k.
    ReduceMis {
        instance: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Co-occurrence graph of a representative function.
    Cooccurrence {
        instance: PathBuf,
        /// JSON list with the representative of each edge.
        #[arg(long)]
        t: PathBuf,
        /// Print DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Looks for an odd hole or antihole in a DIMACS graph; exit 0 if none.
    CheckBerge {
        graph: PathBuf,
        /// Longest cycle searched; defaults to the graph order.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Converts between colourings and exactly hittable partitions.
    Partition {
        instance: PathBuf,
        /// Colouring file for `to-parts`, parts file for `to-colouring`.
        input: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Solves seeded random instances and prints a CSV line per instance.
    Bench {
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Conflict-free chromatic number by exhaustive search.
    ChiCf { instance: PathBuf },
    /// Fewest exactly hittable parts the edges split into.
    EhsPartition { instance: PathBuf },
    /// A random instance for `--seed`.
    Random {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        /// Arbitrary edges instead of intervals.
        #[arg(long)]
        general: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToParts,
    ToColouring,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::Contract(_) => 2,
            Error::Budget(_) => 3,
            Error::Rounding(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_failure(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn load_intervals(path: &Path) -> Result<IntervalHypergraph, Failure> {
    load_instance(path)?
        .intervals()
        .ok_or_else(|| input_failure(format!("{}: edges are not all intervals", path.display())))
}

fn budgets(path: Option<&Path>) -> Result<Budgets, Failure> {
    match path {
        None => Ok(Budgets::default()),
        Some(p) => toml::from_str(&read(p)?).map_err(|e| input_failure(format!("{}: {e}", p.display()))),
    }
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

/// Runs the command; the returned text goes to stdout, the code is the exit
/// status.
fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let budgets = budgets(cli.config.as_deref())?;
    let out = match cli.command {
        Command::Solve { instance } => {
            let ih = load_intervals(&instance)?;
            json(&solve(&ih, &budgets)?)
        }
        Command::Verify { instance, colouring } => {
            let inst = load_instance(&instance)?;
            let h = inst.hypergraph();
            let c = parse_colouring(&read(&colouring)?, h.n())
                .map_err(|e| input_failure(format!("{}: {e}", colouring.display())))?;
            let report = verify_cf(h, &c)?;
            let code = if report.is_cf { 0 } else { 1 };
            #[derive(Serialize)]
            struct Verdict {
                is_cf: bool,
                first_failure: Option<usize>,
                witnesses: Vec<Option<usize>>,
            }
            let verdict = Verdict {
                is_cf: report.is_cf,
                first_failure: report.first_failure(),
                witnesses: report.witnesses,
            };
            return Ok((json(&verdict), code));
        }
        Command::Oracle { oracle } => match oracle {
            OracleCommand::ChiCf { instance } => {
                chi_cf_bruteforce(load_instance(&instance)?.hypergraph(), &OracleBudget::default())?.to_string()
            }
            OracleCommand::EhsPartition { instance } => {
                min_ehs_partition_bruteforce(load_instance(&instance)?.hypergraph(), &OracleBudget::default())?
                    .to_string()
            }
            OracleCommand::Random { n_max, m_max, general } => {
                if general {
                    general_instance_json(&random_hypergraph(n_max, m_max, cli.seed)?)
                } else {
                    interval_instance_json(&random_interval_hypergraph(n_max, m_max, cli.seed)?)
                }
            }
        },
        Command::ReduceMis { instance, k } => {
            let g = build_conflict_graph(load_instance(&instance)?.hypergraph(), k)?;
            let mut comments = vec![format!("complement of the conflict graph G_{k}")];
            comments.extend(g.node_labels());
            write_dimacs(&g.graph().complement(), &comments).trim_end().to_string()
        }
        Command::Cooccurrence { instance, t, dot } => {
            let inst = load_instance(&instance)?;
            let h = inst.hypergraph();
            let t = parse_representatives(&read(&t)?, h).map_err(|e| input_failure(format!("{}: {e}", t.display())))?;
            let g = build_cooccurrence(h, &t)?;
            if dot {
                cooccurrence_dot(&g, &t).trim_end().to_string()
            } else {
                #[derive(Serialize)]
                struct Gamma<'a> {
                    vertices: &'a [usize],
                    edges: Vec<(usize, usize)>,
                }
                json(&Gamma {
                    vertices: g.vertices(),
                    edges: g.labelled_edges(),
                })
            }
        }
        Command::CheckBerge { graph, max_len } => {
            let g = read_dimacs(&read(&graph)?).map_err(|e| input_failure(format!("{}: {e}", graph.display())))?;
            let report = is_berge(&g, max_len.unwrap_or_else(|| full_hole_cap(g.order())), &budgets)?;
            let code = if report.is_berge { 0 } else { 1 };
            return Ok((json(&report), code));
        }
        Command::Partition {
            instance,
            input,
            direction,
        } => {
            let ih = load_intervals(&instance)?;
            let text = read(&input)?;
            let bad = |e: String| input_failure(format!("{}: {e}", input.display()));
            match direction {
                Direction::ToParts => {
                    let c = parse_colouring(&text, ih.n()).map_err(|e| bad(e.to_string()))?;
                    json(&partition_from_colouring(ih.hypergraph(), &c)?)
                }
                Direction::ToColouring => {
                    let parts: Vec<Part> = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
                    colouring_json(&colouring_from_partition(&ih, &parts, &budgets)?)
                }
            }
        }
        Command::Bench { count, n_max, m_max } => {
            let mut lines = vec!["seed,n,m,chi_cf,branch,q_min,wall_us".to_string()];
            for seed in cli.seed..cli.seed + count {
                let ih = random_interval_hypergraph(n_max, m_max, seed)?;
                let start = Instant::now();
                let r = solve(&ih, &budgets)?;
                let wall = start.elapsed().as_micros();
                let q_min = match &r.certificate {
                    Certificate::LpPipeline(p) => p.q_min.to_string(),
                    _ => String::new(),
                };
                lines.push(format!(
                    "{seed},{},{},{},{},{q_min},{wall}",
                    ih.n(),
                    ih.m(),
                    r.chi_cf,
                    r.branch.as_str()
                ));
            }
            lines.join("\n")
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            // A closed pipe (`cfc solve x | head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
