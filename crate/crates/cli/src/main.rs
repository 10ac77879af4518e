//! Command-line front end. Every subcommand reads the text formats of the
//! core crate, writes deterministic output, and exits 0 on success, 1 on
//! domain errors (infeasibility, violations, exceeded caps) and 2 on usage
//! or parse errors.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use tac_orient_core::balance::well_balanced_orientation;
use tac_orient_core::connectivity::{
    is_well_balanced, local_arc_connectivity, local_edge_connectivity, tac,
    two_edge_connected_components, BalanceCheck,
};
use tac_orient_core::generators::{
    build_oco_instance, gadget, parse_labels, random_multigraph, tripled_path,
    tripled_path_oriented, tube, SsubwboInstance, TripledPathOrientation,
};
use tac_orient_core::graph::{parse_digraph, parse_graph, parse_orientation, Multigraph};
use tac_orient_core::reach::max_reach_orientation;
use tac_orient_core::{approx_tac_orientation, brute_force_max_tac, oco_decide};

#[derive(Parser)]
#[command(
    name = "tac-orient",
    version,
    about = "Orient multigraphs to maximize total arc-connectivity"
)]
struct Cli {
    /// Edge-count bound for the exhaustive subcommands.
    #[arg(long, global = true, default_value_t = 20)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Total arc-connectivity of a digraph file.
    Tac {
        /// Digraph file, or - for stdin.
        digraph: String,
    },
    /// Local connectivity between two vertices of a graph or digraph file.
    Lambda {
        /// Graph file (digraph with --directed), or - for stdin.
        file: String,
        u: usize,
        v: usize,
        /// Treat the file as a digraph and compute arc-connectivity.
        #[arg(long)]
        directed: bool,
    },
    /// Compute an orientation; writes an orientation file to stdout and
    /// tac=<value> to stderr.
    Orient {
        #[command(subcommand)]
        method: OrientMethod,
    },
    /// Check a property of an orientation against its graph.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Structural decompositions.
    Decompose {
        #[command(subcommand)]
        what: DecomposeWhat,
    },
    /// Generate instance families; writes a graph or digraph file to stdout.
    Gen {
        #[command(subcommand)]
        what: GenWhat,
    },
    /// Exhaustive decision procedures.
    Decide {
        #[command(subcommand)]
        what: DecideWhat,
    },
}

#[derive(Subcommand)]
enum OrientMethod {
    /// 2/3-approximation of the maximum total arc-connectivity.
    Approx {
        graph: String,
        /// Emit the oriented digraph as DOT instead of an orientation file.
        #[arg(long)]
        dot: bool,
    },
    /// Well-balanced orientation.
    Wb {
        graph: String,
        #[arg(long)]
        dot: bool,
    },
    /// Orientation maximizing ordered reachable pairs.
    Reach {
        graph: String,
        #[arg(long)]
        dot: bool,
    },
    /// Exhaustive optimum (bounded by --cap).
    Exact {
        graph: String,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Well-balancedness: exit 0 and print true, or exit 1 with a witness.
    Wb { graph: String, orientation: String },
}

#[derive(Subcommand)]
enum DecomposeWhat {
    /// 2-edge-connected classes and bridges.
    #[command(name = "2ecc")]
    TwoEcc { graph: String },
}

#[derive(Subcommand)]
enum GenWhat {
    /// Grid gadget with terminal sets X and Y (printed to stderr).
    Gadget {
        alpha: usize,
        beta: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Path on N vertices with every edge in ALPHA parallel copies.
    Tube {
        n: usize,
        alpha: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Path on T vertices with every edge tripled.
    #[command(name = "tripled-path")]
    TripledPath {
        t: usize,
        /// Emit a digraph file of the named orientation instead.
        #[arg(long, value_enum)]
        orient: Option<PathVariant>,
        #[arg(long)]
        dot: bool,
    },
    /// Seeded uniform multigraph without loops.
    Random {
        n: usize,
        m: usize,
        seed: u64,
        #[arg(long)]
        dot: bool,
    },
    /// Tube-amplified instance from a labeled graph; prints k to stderr.
    Oco {
        graph: String,
        labels: String,
        /// Tube-size exponents for the heavy and light tubes.
        #[arg(long, num_args = 2, value_names = ["P", "Q"], default_values_t = [5, 2])]
        exp: Vec<u32>,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum DecideWhat {
    /// Does some orientation reach total arc-connectivity K?
    Oco { graph: String, k: u128 },
}

#[derive(Clone, Copy, ValueEnum)]
enum PathVariant {
    /// Alternating 2/1 pattern (well-balanced).
    G1,
    /// All arcs forward (maximizes tac).
    G2,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }

    fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(CliError::usage)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
    }
}

fn read_graph(path: &str) -> Result<Multigraph, CliError> {
    parse_graph(&read_input(path)?).map_err(CliError::usage)
}

fn check_thread_env() -> Result<(), CliError> {
    match std::env::var("TAC_ORIENT_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => match raw.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(()),
            _ => Err(CliError::Usage(format!(
                "TAC_ORIENT_THREADS must be a positive integer, got {raw:?}"
            ))),
        },
    }
}

fn emit_orientation(
    g: &Multigraph,
    o: &tac_orient_core::graph::Orientation,
    dot: bool,
) -> String {
    if dot {
        o.to_digraph(g).to_dot()
    } else {
        o.to_file_string(g)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    check_thread_env()?;
    match cli.command {
        Command::Tac { digraph } => {
            let d = parse_digraph(&read_input(&digraph)?).map_err(CliError::usage)?;
            println!("{}", tac(&d));
        }
        Command::Lambda {
            file,
            u,
            v,
            directed,
        } => {
            let text = read_input(&file)?;
            let value = if directed {
                let d = parse_digraph(&text).map_err(CliError::usage)?;
                local_arc_connectivity(&d, u, v)
                    .map_err(CliError::domain)?
                    .value
            } else {
                let g = parse_graph(&text).map_err(CliError::usage)?;
                local_edge_connectivity(&g, u, v)
                    .map_err(CliError::domain)?
                    .value
            };
            println!("{value}");
        }
        Command::Orient { method } => {
            let (graph, dot, o) = match method {
                OrientMethod::Approx { graph, dot } => {
                    let g = read_graph(&graph)?;
                    let o = approx_tac_orientation(&g).map_err(CliError::domain)?;
                    (g, dot, o)
                }
                OrientMethod::Wb { graph, dot } => {
                    let g = read_graph(&graph)?;
                    let o = well_balanced_orientation(&g).map_err(CliError::domain)?;
                    (g, dot, o)
                }
                OrientMethod::Reach { graph, dot } => {
                    let g = read_graph(&graph)?;
                    let o = max_reach_orientation(&g);
                    (g, dot, o)
                }
                OrientMethod::Exact { graph, dot } => {
                    let g = read_graph(&graph)?;
                    let o = brute_force_max_tac(&g, cli.cap)
                        .map_err(CliError::domain)?
                        .orientation;
                    (g, dot, o)
                }
            };
            print!("{}", emit_orientation(&graph, &o, dot));
            eprintln!("tac={}", tac(&o.to_digraph(&graph)));
        }
        Command::Verify { what } => match what {
            VerifyWhat::Wb {
                graph,
                orientation,
            } => {
                let g = read_graph(&graph)?;
                let o = parse_orientation(&read_input(&orientation)?, &g)
                    .map_err(CliError::usage)?;
                match is_well_balanced(&g, &o) {
                    BalanceCheck::Balanced => println!("true"),
                    BalanceCheck::Violated(w) => {
                        println!("false");
                        println!(
                            "witness {} {} lambda={} forward={} backward={}",
                            w.u, w.v, w.lambda_undirected, w.forward, w.backward
                        );
                        return Err(CliError::Domain(
                            "orientation is not well-balanced".to_string(),
                        ));
                    }
                }
            }
        },
        Command::Decompose { what } => match what {
            DecomposeWhat::TwoEcc { graph } => {
                let g = read_graph(&graph)?;
                let dec = two_edge_connected_components(&g);
                println!("classes {}", dec.classes.len());
                for class in &dec.classes {
                    let words: Vec<String> = class.iter().map(|v| v.to_string()).collect();
                    println!("{}", words.join(" "));
                }
                println!("bridges {}", dec.bridges.len());
                if !dec.bridges.is_empty() {
                    let words: Vec<String> = dec.bridges.iter().map(|e| e.to_string()).collect();
                    println!("{}", words.join(" "));
                }
            }
        },
        Command::Gen { what } => match what {
            GenWhat::Gadget { alpha, beta, dot } => {
                let w = gadget(alpha, beta).map_err(CliError::domain)?;
                print_graph(&w.graph, dot);
                let xs: Vec<String> = w.x.iter().map(|v| v.to_string()).collect();
                let ys: Vec<String> = w.y.iter().map(|v| v.to_string()).collect();
                eprintln!("X: {}", xs.join(" "));
                eprintln!("Y: {}", ys.join(" "));
            }
            GenWhat::Tube { n, alpha, dot } => {
                let g = tube(n, alpha).map_err(CliError::domain)?;
                print_graph(&g, dot);
            }
            GenWhat::TripledPath { t, orient, dot } => match orient {
                None => {
                    let g = tripled_path(t).map_err(CliError::domain)?;
                    print_graph(&g, dot);
                }
                Some(variant) => {
                    let variant = match variant {
                        PathVariant::G1 => TripledPathOrientation::Alternating21,
                        PathVariant::G2 => TripledPathOrientation::AllForward,
                    };
                    let (g, o) = tripled_path_oriented(t, variant).map_err(CliError::domain)?;
                    let d = o.to_digraph(&g);
                    if dot {
                        print!("{}", d.to_dot());
                    } else {
                        print!("{}", d.to_canonical_string());
                    }
                }
            },
            GenWhat::Random { n, m, seed, dot } => {
                let g = random_multigraph(n, m, seed).map_err(CliError::domain)?;
                print_graph(&g, dot);
            }
            GenWhat::Oco {
                graph,
                labels,
                exp,
                dot,
            } => {
                let g = read_graph(&graph)?;
                let n = g.vertex_count();
                let labels =
                    parse_labels(&read_input(&labels)?, n).map_err(CliError::usage)?;
                let inst = SsubwboInstance::from_labels(g, labels);
                let oco = build_oco_instance(&inst, exp[0], exp[1]).map_err(CliError::domain)?;
                print_graph(&oco.graph, dot);
                eprintln!("k={}", oco.target);
            }
        },
        Command::Decide { what } => match what {
            DecideWhat::Oco { graph, k } => {
                let g = read_graph(&graph)?;
                let yes = oco_decide(&g, k, cli.cap).map_err(CliError::domain)?;
                println!("{}", if yes { "true" } else { "false" });
            }
        },
    }
    Ok(())
}

fn print_graph(g: &Multigraph, dot: bool) {
    if dot {
        print!("{}", g.to_dot());
    } else {
        print!("{}", g.to_canonical_string());
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
