use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use dynchrome::dimacs::{emit_dimacs, parse_dimacs};
use dynchrome::experiment::{run_experiment, ExperimentSpec, Family, Params, Scalar};
use dynchrome::harness::color_graph;
use dynchrome::oracles::{OracleBudget, OracleValues};
use dynchrome::pipelines::{bound_report, Algorithm, PipelineConfig};
use dynchrome::{Error, Graph, Result};

#[derive(Parser)]
#[command(name = "dynchrome", version, about = "Dynamic graph coloring with certified color bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact χ, χ₂, α, α′ and ω for a DIMACS graph.
    Exact {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a coloring pipeline and write its JSON report.
    Color {
        #[arg(long)]
        algo: Algorithm,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall-clock time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate every bound formula on a DIMACS graph.
    Bounds {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate a graph family member as DIMACS.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Graph name for the `named` family.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a batch experiment described by a JSON spec.
    Experiment {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_dimacs(&text)
}

fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => match io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Error::Input(format!("cannot write stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn run(command: Command) -> Result<u8> {
    let budget = OracleBudget::from_env()?;
    match command {
        Command::Exact { input } => {
            let g = read_graph(&input)?;
            let (values, omitted) = OracleValues::compute(&g, &budget);
            let json = serde_json::json!({ "oracle_values": values, "omitted": omitted });
            write_out(None, &format!("{}\n", serde_json::to_string_pretty(&json).unwrap()))?;
            Ok(if omitted.is_empty() { 0 } else { 3 })
        }
        Command::Color {
            algo,
            input,
            seed,
            out,
            timing,
        } => {
            let g = read_graph(&input)?;
            let mut cfg = PipelineConfig::new(seed);
            cfg.budget = budget;
            let start = Instant::now();
            let mut report = color_graph(algo, &g, &cfg)?;
            if timing {
                report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            let mut text = report.to_json();
            text.push('\n');
            write_out(out.as_deref(), &text)?;
            if !report.consistency_errors.is_empty() {
                for e in &report.consistency_errors {
                    eprintln!("consistency: {e}");
                }
                return Ok(4);
            }
            Ok(0)
        }
        Command::Bounds { input } => {
            let g = read_graph(&input)?;
            let report = bound_report(&g, &budget);
            write_out(None, &format!("{}\n", report.to_json()))?;
            Ok(if report.omitted.is_empty() { 0 } else { 3 })
        }
        Command::Gen {
            family,
            n,
            r,
            a,
            b,
            name,
            seed,
            out,
        } => {
            let mut params = Params::default();
            for (key, value) in [("n", n), ("r", r), ("a", a), ("b", b)] {
                if let Some(v) = value {
                    params.0.insert(key.into(), Scalar::Int(v));
                }
            }
            if let Some(name) = name {
                params.0.insert("name".into(), Scalar::Text(name));
            }
            let g = family.build(&params, seed)?;
            write_out(out.as_deref(), &emit_dimacs(&g))?;
            Ok(0)
        }
        Command::Experiment { spec, out } => {
            let text = fs::read_to_string(&spec)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", spec.display())))?;
            let spec: ExperimentSpec =
                serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad experiment spec: {e}")))?;
            let report = run_experiment(&spec)?;
            let mut text = report.to_json();
            text.push('\n');
            write_out(out.as_deref(), &text)?;
            Ok(if report.aggregates.bound_violations > 0 { 4 } else { 0 })
        }
    }
}
