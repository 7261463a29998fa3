//! `meander` — command-line front end for the meander/lattice engine.
//!
//! Every subcommand is a thin adapter over the library: parse the inputs,
//! call one library function, format the answer. Data goes to stdout (or
//! `--output`), diagnostics to stderr. Exit codes: 0 success, 1 a `verify`
//! run found a structural failure, 2 usage errors (bad syntax, inputs
//! outside the lattice, resource cap exceeded).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use meander_lattice::meander::{
    enumerate_meanders, lattice_distance_bfs, lattice_geodesic, EnumerationOptions, MeanderError,
    MeanderSystem, DEFAULT_MAX_ORDER,
};
use meander_lattice::noncross::{enumerate_nc, hasse, NoncrossingPartition};
use meander_lattice::perm::{cayley_distance, Permutation};
use meander_lattice::render::{hasse_dot, render_meander, render_partition_disc, RenderOptions};
use meander_lattice::surface::genus;
use meander_lattice::verify::verify_order;

/// Environment variable overriding the default resource cap.
const CAP_ENV: &str = "MEANDER_MAX_ORDER";

#[derive(Parser)]
#[command(
    name = "meander",
    version,
    about = "Meanders, noncrossing partitions, and lattice geodesics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Override the resource cap on the order for commands that materialize
    /// the whole lattice (default 10, or the MEANDER_MAX_ORDER variable).
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count (or list) the meanders of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Print only the count, skipping the pair list.
        #[arg(long)]
        count_only: bool,
        /// Worker threads for the pair scan; the result is identical for
        /// every value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the noncrossing partitions of one order.
    Nc {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-curve count of the system with the given halves.
    Components {
        #[arg(long)]
        order: usize,
        /// Upper-half permutation, in cycle notation.
        #[arg(long)]
        upper: String,
        /// Lower-half permutation, in cycle notation.
        #[arg(long)]
        lower: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Transposition-graph distance between two permutations.
    Distance {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Shortest-path distance inside the lattice Hasse graph.
    LatticeDistance {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// A minimum-length path between two lattice permutations that stays
    /// inside the lattice.
    Geodesic {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Genus of the glued surface of a permutation.
    Genus {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dual of a noncrossing partition (or its inverse with --inverse).
    Dual {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        partition: String,
        /// Apply the inverse map instead, so `dual --inverse` undoes `dual`.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Least upper bound of two noncrossing partitions.
    Join {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Greatest lower bound of two noncrossing partitions.
    Meet {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The lattice Hasse graph: DOT as text, vertex/edge lists as JSON.
    Hasse {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// SVG arc diagram of a meander system.
    RenderMeander {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
        #[command(flatten)]
        style: Style,
    },
    /// SVG disc picture of a noncrossing partition.
    RenderPartition {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        style: Style,
    },
    /// Run the structural self-checks for one order; exits 1 on failure.
    Verify {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct Style {
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 360)]
    height: u32,
    #[arg(long, default_value_t = 2.0)]
    stroke_width: f64,
    /// Draw every arc black instead of coloring by component.
    #[arg(long)]
    monochrome: bool,
    /// Skip the point labels.
    #[arg(long)]
    no_labels: bool,
}

impl Style {
    fn to_options(&self) -> RenderOptions {
        RenderOptions {
            width: self.width,
            height: self.height,
            stroke_width: self.stroke_width,
            color_by_component: !self.monochrome,
            labels: !self.no_labels,
        }
    }
}

enum CliError {
    Usage(String),
    Verification(String),
}

impl From<MeanderError> for CliError {
    fn from(e: MeanderError) -> Self {
        match &e {
            MeanderError::OrderAboveCap { .. } => {
                CliError::Usage(format!("{e}; raise --max-order or {CAP_ENV}"))
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = resource_cap(cli.max_order);
    let output = cli.output.clone();
    match run(cli.command, cap) {
        Ok(text) => match emit(&output, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Verification(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn resource_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    })
    .unwrap_or(DEFAULT_MAX_ORDER)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), std::io::Error> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order == 0 {
        return Err(CliError::Usage("order must be at least 1".into()));
    }
    Ok(())
}

/// Cap check for the commands that materialize all of Λ_n.
fn check_cap(order: usize, cap: usize) -> Result<(), CliError> {
    check_order(order)?;
    if order > cap {
        return Err(CliError::Usage(format!(
            "order {order} exceeds the resource cap {cap}; raise --max-order or {CAP_ENV}"
        )));
    }
    Ok(())
}

fn parse_perm(text: &str, order: usize, role: &str) -> Result<Permutation, CliError> {
    Permutation::parse(text, order)
        .map_err(|e| CliError::Usage(format!("invalid {role} permutation {text:?}: {e}")))
}

fn parse_partition(text: &str, order: usize) -> Result<NoncrossingPartition, CliError> {
    NoncrossingPartition::parse(text, order)
        .map_err(|e| CliError::Usage(format!("invalid partition {text:?}: {e}")))
}

fn run(command: Command, cap: usize) -> Result<String, CliError> {
    match command {
        Command::Enumerate {
            order,
            count_only,
            jobs,
            format,
        } => {
            check_order(order)?;
            let options = EnumerationOptions {
                count_only,
                jobs,
                max_order: cap,
            };
            let result = enumerate_meanders(order, &options)?;
            Ok(match format {
                Format::Text => {
                    let mut text = format!("{}\n", result.count);
                    if let Some(pairs) = &result.pairs {
                        for (upper, lower) in pairs {
                            text.push_str(&format!("{upper}\t{lower}\n"));
                        }
                    }
                    text
                }
                Format::Json => {
                    let mut value = json!({"order": result.order, "count": result.count});
                    if let Some(pairs) = &result.pairs {
                        value["pairs"] = json!(pairs
                            .iter()
                            .map(|(u, l)| vec![u.to_string(), l.to_string()])
                            .collect::<Vec<_>>());
                    }
                    format!("{value}\n")
                }
            })
        }
        Command::Nc { order, format } => {
            check_cap(order, cap)?;
            let partitions = enumerate_nc(order);
            Ok(match format {
                Format::Text => partitions
                    .iter()
                    .map(|p| format!("{p}\n"))
                    .collect::<String>(),
                Format::Json => {
                    let value = json!({
                        "order": order,
                        "count": partitions.len(),
                        "partitions": partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    });
                    format!("{value}\n")
                }
            })
        }
        Command::Components {
            order,
            upper,
            lower,
            format,
        } => {
            check_order(order)?;
            let system = MeanderSystem::new(
                parse_perm(&upper, order, "upper")?,
                parse_perm(&lower, order, "lower")?,
            )?;
            let components = system.components();
            Ok(match format {
                Format::Text => format!("{components}\n"),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "order": order,
                        "upper": system.upper().to_string(),
                        "lower": system.lower().to_string(),
                        "components": components,
                    })
                ),
            })
        }
        Command::Distance {
            order,
            from,
            to,
            format,
        } => {
            check_order(order)?;
            let a = parse_perm(&from, order, "from")?;
            let b = parse_perm(&to, order, "to")?;
            let distance = cayley_distance(&a, &b);
            Ok(match format {
                Format::Text => format!("{distance}\n"),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "order": order,
                        "from": a.to_string(),
                        "to": b.to_string(),
                        "distance": distance,
                    })
                ),
            })
        }
        Command::LatticeDistance {
            order,
            from,
            to,
            format,
        } => {
            check_cap(order, cap)?;
            let a = parse_perm(&from, order, "from")?;
            let b = parse_perm(&to, order, "to")?;
            let graph = hasse(order);
            let distance = lattice_distance_bfs(&graph, &a, &b)?;
            Ok(match format {
                Format::Text => format!("{distance}\n"),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "order": order,
                        "from": a.to_string(),
                        "to": b.to_string(),
                        "distance": distance,
                    })
                ),
            })
        }
        Command::Geodesic {
            order,
            from,
            to,
            format,
        } => {
            check_order(order)?;
            let a = parse_perm(&from, order, "from")?;
            let b = parse_perm(&to, order, "to")?;
            let path = lattice_geodesic(&a, &b)?;
            Ok(match format {
                Format::Text => path
                    .vertices()
                    .iter()
                    .map(|v| format!("{v}\n"))
                    .collect::<String>(),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "order": order,
                        "from": a.to_string(),
                        "to": b.to_string(),
                        "length": path.edge_count(),
                        "vertices": path.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                ),
            })
        }
        Command::Genus {
            order,
            perm,
            format,
        } => {
            check_order(order)?;
            let p = parse_perm(&perm, order, "input")?;
            let g = genus(&p);
            Ok(match format {
                Format::Text => format!("{g}\n"),
                Format::Json => format!(
                    "{}\n",
                    json!({"order": order, "perm": p.to_string(), "genus": g})
                ),
            })
        }
        Command::Dual {
            order,
            partition,
            inverse,
            format,
        } => {
            check_order(order)?;
            let p = parse_partition(&partition, order)?;
            let result = if inverse { p.undual() } else { p.dual() };
            Ok(partition_output(order, &result, format))
        }
        Command::Join {
            order,
            left,
            right,
            format,
        } => {
            check_order(order)?;
            let p = parse_partition(&left, order)?;
            let q = parse_partition(&right, order)?;
            Ok(partition_output(order, &p.join(&q), format))
        }
        Command::Meet {
            order,
            left,
            right,
            format,
        } => {
            check_order(order)?;
            let p = parse_partition(&left, order)?;
            let q = parse_partition(&right, order)?;
            Ok(partition_output(order, &p.meet(&q), format))
        }
        Command::Hasse { order, format } => {
            check_cap(order, cap)?;
            let graph = hasse(order);
            Ok(match format {
                Format::Text => hasse_dot(&graph),
                Format::Json => format!("{}\n", graph.to_json()),
            })
        }
        Command::RenderMeander {
            order,
            upper,
            lower,
            style,
        } => {
            check_order(order)?;
            let system = MeanderSystem::new(
                parse_perm(&upper, order, "upper")?,
                parse_perm(&lower, order, "lower")?,
            )?;
            Ok(render_meander(&system, &style.to_options()))
        }
        Command::RenderPartition {
            order,
            partition,
            style,
        } => {
            check_order(order)?;
            let p = parse_partition(&partition, order)?;
            Ok(render_partition_disc(&p, &style.to_options()))
        }
        Command::Verify { order, format } => {
            check_cap(order, cap)?;
            let report = verify_order(order);
            let text = match format {
                Format::Text => {
                    let mut text = String::new();
                    for check in &report.checks {
                        text.push_str(&format!(
                            "{}: {} ({})\n",
                            check.name,
                            if check.passed { "ok" } else { "FAILED" },
                            check.detail
                        ));
                    }
                    text.push_str(&format!(
                        "order {}: {}\n",
                        report.order,
                        if report.all_passed() {
                            "all checks passed"
                        } else {
                            "CHECKS FAILED"
                        }
                    ));
                    text
                }
                Format::Json => format!("{}\n", report.to_json()),
            };
            if report.all_passed() {
                Ok(text)
            } else {
                // Still show the report before signalling failure.
                print!("{text}");
                Err(CliError::Verification(format!(
                    "verification failed at order {}",
                    report.order
                )))
            }
        }
    }
}

fn partition_output(order: usize, p: &NoncrossingPartition, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", json!({"order": order, "partition": p.to_string()})),
    }
}
