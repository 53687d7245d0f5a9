//! Command-line front end: analyze defining graphs, test finite type, emit
//! links and balls, certify paths, and construct witnesses.
//!
//! Exit codes: 0 on success, 2 on parse errors (including bad usage), 3 on
//! precondition errors such as a join graph for `witness` or a labeled
//! graph for `ball`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use artin_cube::ball::{ball_dot, ball_json, build_ball, verify_link_base};
use artin_cube::coxeter::{is_fc_type, is_finite_type};
use artin_cube::flag::{flag_complex, flag_complex_dot, link_partition_at};
use artin_cube::graph::{Clique, DefiningGraph};
use artin_cube::paths::{certify_geodesic, parse_path_json, EdgePath};
use artin_cube::report::{analyze, emit, ReportFormat};
use artin_cube::witness::{acyl_witness, loxodromic_word, AcylWitnessJson, WitnessWordJson};

#[derive(Parser)]
#[command(
    name = "artin-cube",
    about = "Structural analysis of Artin groups via defining graphs and their clique-cube complexes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessKindArg {
    /// Shortest loxodromic word (least non-adjacent pair).
    Lox,
    /// Full acylindricity witness package.
    Acyl,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis pipeline and print the report.
    Analyze {
        graphfile: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Finite-type verdicts for the graph's cliques, as JSON.
    FiniteType {
        graphfile: PathBuf,
        /// Restrict to one clique, given as comma-separated vertex names.
        #[arg(long)]
        clique: Option<String>,
    },
    /// Flag complex and link structure.
    Links {
        graphfile: PathBuf,
        /// Describe the link partition at this clique (comma-separated).
        #[arg(long)]
        at: Option<String>,
        /// Write the flag complex 1-skeleton as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Construct a loxodromic or acylindricity witness.
    Witness {
        graphfile: PathBuf,
        #[arg(long, value_enum, default_value = "acyl")]
        kind: WitnessKindArg,
    },
    /// Certify an edge path (JSON file) as locally geodesic.
    Certify {
        graphfile: PathBuf,
        pathfile: PathBuf,
    },
    /// Build a finite ball of the clique-cube complex (right-angled only).
    Ball {
        graphfile: PathBuf,
        #[arg(long)]
        radius: usize,
        /// Write the 1-skeleton as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the full ball as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum CliError {
    Io(String),
    Parse(String),
    Precondition(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Parse(m) | CliError::Precondition(m) => m,
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<DefiningGraph, CliError> {
    let text = read_file(path)?;
    DefiningGraph::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn parse_clique_arg(g: &DefiningGraph, arg: &str) -> Result<Clique, CliError> {
    let names: Vec<&str> = arg
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Clique::from_names(g, &names).map_err(|e| CliError::Precondition(e.to_string()))
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { graphfile, json } => {
            let g = load_graph(&graphfile)?;
            let report = analyze(&g);
            let format = if json {
                ReportFormat::Json
            } else {
                ReportFormat::Text
            };
            print!("{}", emit(&report, format));
            if format == ReportFormat::Json {
                println!();
            }
        }
        Command::FiniteType { graphfile, clique } => {
            let g = load_graph(&graphfile)?;
            let value = match clique {
                Some(arg) => {
                    let t = parse_clique_arg(&g, &arg)?;
                    let v = is_finite_type(&g, &t);
                    json!({
                        "clique": t.names(&g),
                        "finite": v.finite,
                        "components": v.components.iter().map(|c| json!({
                            "members": c.members.iter().map(|&s| g.name(s)).collect::<Vec<_>>(),
                            "type": c.coxeter_type.to_string(),
                        })).collect::<Vec<_>>(),
                    })
                }
                None => {
                    let fc = is_fc_type(&g);
                    let maximal: Vec<serde_json::Value> = g
                        .enumerate_cliques()
                        .iter()
                        .filter(|info| info.maximal)
                        .map(|info| {
                            let v = is_finite_type(&g, &info.clique);
                            json!({
                                "clique": info.clique.names(&g),
                                "finite": v.finite,
                                "components": v.components.iter().map(|c| json!({
                                    "members": c.members.iter().map(|&s| g.name(s)).collect::<Vec<_>>(),
                                    "type": c.coxeter_type.to_string(),
                                })).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    json!({
                        "fc": fc.fc,
                        "offending_cliques": fc.offending.iter().map(|c| c.names(&g)).collect::<Vec<_>>(),
                        "maximal_cliques": maximal,
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Command::Links { graphfile, at, dot } => {
            let g = load_graph(&graphfile)?;
            if let Some(path) = dot {
                write_file(&path, &flag_complex_dot(&g))?;
            }
            let value = match at {
                Some(arg) => {
                    let t = parse_clique_arg(&g, &arg)?;
                    let partition = link_partition_at(&g, &t)
                        .map_err(|e| CliError::Precondition(e.to_string()))?;
                    json!({
                        "at": t.names(&g),
                        "families": partition.families.iter().map(|f| json!({
                            "generator": g.name(f.generator),
                            "residue": f.residue.names(&g),
                            "same_family_vertices_adjacent": false,
                            "infinite_witness": format!(
                                "{}^n . A{} for n in Z",
                                g.name(f.generator),
                                f.residue.display(&g)
                            ),
                        })).collect::<Vec<_>>(),
                    })
                }
                None => {
                    let complex = flag_complex(&g);
                    json!({
                        "vertices": g.names(),
                        "simplex_counts_by_dim": complex.counts_by_dim(),
                        "simplices": complex.simplices().iter().map(|s| {
                            s.iter().map(|&v| g.name(v)).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Command::Witness { graphfile, kind } => {
            let g = load_graph(&graphfile)?;
            let value = match kind {
                WitnessKindArg::Lox => {
                    let w = loxodromic_word(&g)
                        .map_err(|e| CliError::Precondition(e.to_string()))?;
                    serde_json::to_value(WitnessWordJson::of(&g, &w)).expect("json")
                }
                WitnessKindArg::Acyl => {
                    let w =
                        acyl_witness(&g).map_err(|e| CliError::Precondition(e.to_string()))?;
                    serde_json::to_value(AcylWitnessJson::of(&g, &w)).expect("json")
                }
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Command::Certify {
            graphfile,
            pathfile,
        } => {
            let g = load_graph(&graphfile)?;
            let text = read_file(&pathfile)?;
            let spec = parse_path_json(&text)
                .map_err(|e| CliError::Parse(format!("{}: {e}", pathfile.display())))?;
            let path = EdgePath::from_spec(&g, &spec)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            let cert =
                certify_geodesic(&g, &path).map_err(|e| CliError::Precondition(e.to_string()))?;
            println!("{}", serde_json::to_string_pretty(&cert).expect("json"));
        }
        Command::Ball {
            graphfile,
            radius,
            dot,
            json,
        } => {
            let g = load_graph(&graphfile)?;
            let ball =
                build_ball(&g, radius).map_err(|e| CliError::Precondition(e.to_string()))?;
            if let Some(path) = &dot {
                write_file(path, &ball_dot(&g, &ball))?;
            }
            if let Some(path) = &json {
                let doc = ball_json(&g, &ball);
                write_file(
                    path,
                    &serde_json::to_string_pretty(&doc).expect("json"),
                )?;
            }
            let link = verify_link_base(&g, &ball);
            println!(
                "ball of budget {}: {} vertices, {} edges, max cube dimension {}",
                ball.radius,
                ball.vertices.len(),
                ball.edge_count(),
                ball.max_dimension()
            );
            println!(
                "link of base vertex matches flag complex: {}",
                if link.isomorphic { "yes" } else { "no" }
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
