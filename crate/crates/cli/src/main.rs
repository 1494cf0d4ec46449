use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rmis_core::generators as gen;
use rmis_core::oracle::{enumerate_mis, enumerate_robust_mis, is_robust_mis_bruteforce};
use rmis_core::sim::rmis_forall_program;
use rmis_core::*;

#[derive(Parser)]
#[command(name = "rmis", version, about = "Robust maximal independent sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether every MIS of the graph is robust.
    Classify { input: PathBuf },
    /// Print the ABC-tree.
    Abc {
        input: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Find a robust MIS.
    Find {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Check whether a vertex set is a robust MIS.
    Verify {
        input: PathBuf,
        #[arg(long)]
        set: MisSet,
        /// Search spanning subgraphs instead of using the criterion.
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// List every robust MIS.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Write a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the distributed algorithm for graphs where every MIS is robust.
    Simulate {
        input: PathBuf,
        /// `identity` or `random:<seed>`.
        #[arg(long, default_value = "identity")]
        ids: String,
        /// Defaults to the vertex count plus 4.
        #[arg(long)]
        max_rounds: Option<usize>,
    },
}

#[derive(Args)]
struct Caps {
    #[arg(long, default_value_t = OracleConfig::default().max_removable_edges)]
    max_removable_edges: usize,
    #[arg(long, default_value_t = OracleConfig::default().max_enumeration_vertices)]
    max_enumeration_vertices: usize,
}

impl Caps {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            max_removable_edges: self.max_removable_edges,
            max_enumeration_vertices: self.max_enumeration_vertices,
        }
    }
}

#[derive(Subcommand)]
enum Family {
    Gk {
        #[arg(long)]
        k: usize,
        /// Emit names, M1 and M2 alongside the edge list.
        #[arg(long)]
        json: bool,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Bull,
    Triangle,
    Square,
    Lollipop {
        path_len: usize,
        clique: usize,
    },
    RandomConnected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
    RandomSputnik {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        seed: u64,
    },
}

/// Outcome of a command: positive or negative.
type Outcome = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rmis: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(input: &PathBuf) -> Result<Graph, String> {
    let text = if input.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?
    };
    Graph::from_edge_list(&text).map_err(|e| e.to_string())
}

fn run(command: Command) -> Outcome {
    let err = |e: Error| e.to_string();
    match command {
        Command::Classify { input } => {
            let g = read_graph(&input)?;
            let verdict = in_rmis_forall(&g).map_err(err)?;
            println!("{}", serde_json::to_string_pretty(&verdict).unwrap());
            Ok(verdict.rmis_forall)
        }
        Command::Abc { input, dot } => {
            let g = read_graph(&input)?;
            let tree = build_abc_tree(&g).map_err(err)?;
            if dot {
                print!("{}", tree.to_dot());
            } else {
                print!("{}", tree.render_text());
            }
            Ok(true)
        }
        Command::Find { input, json, trace } => {
            let g = read_graph(&input)?;
            let report = find_rmis_traced(&g).map_err(err)?;
            if json {
                let labels: Vec<_> = match &report.tree {
                    Some(rt) => (0..rt.tree().len())
                        .map(|x| json!({"node": rt.node(x).to_string(), "labels": report.labels[x].labels()}))
                        .collect(),
                    None => Vec::new(),
                };
                let out = json!({"exists": report.result.is_some(), "set": report.result, "labels": labels});
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                if trace {
                    print!("{}", report.render_trace());
                }
                match &report.result {
                    Some(m) => println!("{m}"),
                    None => println!("NO-RMIS"),
                }
            }
            Ok(report.result.is_some())
        }
        Command::Verify {
            input,
            set,
            brute,
            caps,
        } => {
            let g = read_graph(&input)?;
            if !is_mis(&g, &set).map_err(err)? {
                println!("NOT-MIS");
                return Ok(false);
            }
            let robust = if brute {
                is_robust_mis_bruteforce(&g, &set, &caps.config()).map_err(err)?
            } else {
                is_robust_mis(&g, &set).map_err(err)?
            };
            println!("{}", if robust { "ROBUST" } else { "NOT-ROBUST" });
            Ok(robust)
        }
        Command::Oracle { input, brute, caps } => {
            let g = read_graph(&input)?;
            let cfg = caps.config();
            let found = if brute {
                let mut out = Vec::new();
                for m in enumerate_mis(&g, &cfg).map_err(err)? {
                    if is_robust_mis_bruteforce(&g, &m, &cfg).map_err(err)? {
                        out.push(m);
                    }
                }
                out
            } else {
                enumerate_robust_mis(&g, &cfg).map_err(err)?
            };
            for m in &found {
                println!("{m}");
            }
            if found.is_empty() {
                println!("NO-RMIS");
            }
            Ok(!found.is_empty())
        }
        Command::Gen { family } => generate(family),
        Command::Simulate {
            input,
            ids,
            max_rounds,
        } => {
            let g = read_graph(&input)?;
            let ids = match ids.as_str() {
                "identity" => IdAssignment::identity(&g),
                other => {
                    let seed = other
                        .strip_prefix("random:")
                        .and_then(|s| s.parse::<u64>().ok())
                        .ok_or_else(|| {
                            format!("--ids expects identity or random:<seed>, got {other:?}")
                        })?;
                    IdAssignment::random(&g, seed)
                }
            };
            let max_rounds = max_rounds.unwrap_or(g.n() + 4);
            let result = run_sync(&g, &rmis_forall_program(), &ids, max_rounds).map_err(err)?;
            println!("{}", serde_json::to_string_pretty(&result).unwrap());
            is_mis(&g, &result.in_set()).map_err(err)
        }
    }
}

fn generate(family: Family) -> Outcome {
    let err = |e: Error| e.to_string();
    let g = match family {
        Family::Gk { k, json } => {
            let inst = gen::gk(k);
            if json {
                let mut out = serde_json::to_value(&inst).unwrap();
                out["edges"] = inst.graph.to_edge_list().into();
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                return Ok(true);
            }
            inst.graph
        }
        Family::CompleteBipartite { m, n } => gen::complete_bipartite(m, n).map_err(err)?,
        Family::Cycle { n } => gen::cycle(n).map_err(err)?,
        Family::Path { n } => gen::path(n).map_err(err)?,
        Family::Bull => gen::bull(),
        Family::Triangle => gen::triangle(),
        Family::Square => gen::square(),
        Family::Lollipop { path_len, clique } => gen::lollipop(path_len, clique).map_err(err)?,
        Family::RandomConnected { n, p, seed } => gen::random_connected(n, p, seed).map_err(err)?,
        Family::RandomSputnik { size, seed } => gen::random_sputnik(seed, size).map_err(err)?,
    };
    print!("{}", g.to_edge_list());
    Ok(true)
}
