//! `framebox`: generate, verify, analyze and certify frame and box
//! intersection graphs.
//!
//! Exit codes: 0 pass, 1 semantic violation, 2 malformed input or usage.

mod commands;
mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use framebox_core::cbu::SearchLimits;
use framebox_core::certify::CertifyOptions;
use framebox_core::coloring::DEFAULT_BUDGET;

use commands::Status;
use config::Config;

#[derive(Parser)]
#[command(name = "framebox", version, about = "Frame and box intersection graph workbench")]
struct Cli {
    /// JSON document supplying defaults for any flag
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Budget {
    /// Search node budget
    #[arg(long, env = "FRAMEBOX_BUDGET")]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Write generated graphs and families
    #[command(subcommand)]
    Gen(GenCommand),
    /// Check a family against its class definition
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Chromatic number, clique number, triangle and wheel detection
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        budget: Budget,
        /// Also decide k-colorability
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Bounded representation search
    #[command(subcommand)]
    Search(SearchCommand),
    /// Append a unit axis to every box
    Lift {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Machine-checked certificates
    #[command(subcommand)]
    Certify(CertifyCommand),
    /// SVG for 2-D families, DOT for graphs
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// A level of the Burling sequence
    Burling {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=5))]
        level: Option<u64>,
        /// Also write a frame realization
        #[arg(long)]
        frames: bool,
        #[arg(short, long)]
        out_dir: Option<PathBuf>,
    },
    /// The built-in wheel with its 2-D box representation
    G1 {
        #[arg(short, long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Frame family: the three frame axioms, triangle-freeness, probes
    Burling {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Box family: contacts must be degenerate on axis 0
    Cbu {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    Cbu {
        file: PathBuf,
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        budget: Budget,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// Wheel with a 2-D box representation versus a Burling frame family
    Theorem1 {
        #[arg(long)]
        g1_graph: Option<PathBuf>,
        #[arg(long)]
        g1_boxes: Option<PathBuf>,
        #[arg(long)]
        g2_graph: Option<PathBuf>,
        #[arg(long)]
        g2_frames: Option<PathBuf>,
        /// Also search for a box representation of G2 in this dimension
        #[arg(long)]
        refute_dim: Option<usize>,
        #[command(flatten)]
        budget: Budget,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Status> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let budget = |b: Budget| b.budget.or(cfg.budget).unwrap_or(DEFAULT_BUDGET);
    let limits = SearchLimits {
        max_vertices: cfg.search_max_vertices.unwrap_or(SearchLimits::default().max_vertices),
        max_dim: cfg.search_max_dim.unwrap_or(SearchLimits::default().max_dim),
    };
    let out_dir = |o: Option<PathBuf>| o.or(cfg.out_dir.clone()).unwrap_or_else(|| PathBuf::from("."));

    match cli.command {
        Command::Gen(GenCommand::Burling { level, frames, out_dir: dir }) => {
            let level = match level.map(|l| l as usize).or(cfg.level) {
                Some(0) | None => anyhow::bail!("--level must be at least 1"),
                Some(l) => l,
            };
            let opts = commands::GenBurling {
                level,
                frames: frames || cfg.frames.unwrap_or(false),
                out_dir: out_dir(dir),
                realization_max: cfg.realization_max.unwrap_or_else(commands::default_realization_max),
            };
            for p in commands::gen_burling(&opts)? {
                println!("{}", p.display());
            }
            Ok(Status::Pass)
        }
        Command::Gen(GenCommand::G1 { out_dir: dir }) => {
            for p in commands::gen_g1(&out_dir(dir))? {
                println!("{}", p.display());
            }
            Ok(Status::Pass)
        }
        Command::Verify(VerifyCommand::Burling { file, output }) => {
            let (status, text) = commands::verify_burling(&file)?;
            commands::emit(output.as_deref(), &text)?;
            Ok(status)
        }
        Command::Verify(VerifyCommand::Cbu { file, output }) => {
            let (status, text) = commands::verify_cbu_file(&file)?;
            commands::emit(output.as_deref(), &text)?;
            Ok(status)
        }
        Command::Analyze { file, budget: b, k, output } => {
            let text = commands::analyze_file(&file, budget(b), k.or(cfg.k))?;
            commands::emit(output.as_deref(), &text)?;
            Ok(Status::Pass)
        }
        Command::Search(SearchCommand::Cbu { file, dim, budget: b, output }) => {
            let Some(dim) = dim.or(cfg.dim) else {
                anyhow::bail!("--dim is required");
            };
            let text = commands::search_file(&file, dim, budget(b), limits)?;
            commands::emit(output.as_deref(), &text)?;
            Ok(Status::Pass)
        }
        Command::Lift { file, output } => {
            commands::emit(output.as_deref(), &commands::lift_file(&file)?)?;
            Ok(Status::Pass)
        }
        Command::Certify(CertifyCommand::Theorem1 {
            g1_graph,
            g1_boxes,
            g2_graph,
            g2_frames,
            refute_dim,
            budget: b,
            output,
        }) => {
            let files = commands::CertifyFiles {
                g1_graph: g1_graph.or(cfg.g1_graph.clone()),
                g1_boxes: g1_boxes.or(cfg.g1_boxes.clone()),
                g2_graph: g2_graph.or(cfg.g2_graph.clone()),
                g2_frames: g2_frames.or(cfg.g2_frames.clone()),
            };
            let opts = CertifyOptions { refute_dim: refute_dim.or(cfg.refute_dim), budget: budget(b), limits };
            let (status, text) = commands::certify(&files, &opts)?;
            commands::emit(output.as_deref(), &text)?;
            Ok(status)
        }
        Command::Render { file, output } => {
            commands::render(&file, Path::new(&output))?;
            Ok(Status::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
