//! `sz5`: command-line front end for the sz5-core algorithms.

mod cache;
mod commands;
mod mgf;
mod report;

use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cache::Cache;
use crate::commands::{CliError, CliResult, Context};
use crate::mgf::GraphDocument;
use crate::report::Report;

const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "sz5", version, about = "Strong Z_k-connectivity and reductions of planar multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Modulus k.
    #[arg(long, global = true, default_value_t = 5)]
    k: u32,
    /// Search budget in nodes, per search.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    budget: u64,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append-only verdict cache file.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Input {
    /// MGF file; `-` or absent reads standard input.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Weight w(G) with a minimizing partition.
    Weight(Input),
    /// S5-contractibility, with a failing partition as witness.
    Contractible(Input),
    /// Strong Z_k-connectivity.
    Szk(Input),
    /// A β-orientation for the boundary given by --beta.
    Orient {
        #[command(flatten)]
        input: Input,
        /// Comma-separated boundary values, one per vertex, summing to 0 mod k.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// A modulo-k orientation.
    ModOrient(Input),
    /// Modular certificate of a circular k/((k-1)/2)-flow.
    Circular(Input),
    /// Antisymmetric Z5-flow for the orientation given by the edge lines.
    Asf(Input),
    /// Reduction trace by contraction and path lifting; with --beta, the orientation it yields.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Discharging transcript of the embedding.
    Discharge(Input),
    /// Forbidden configurations and face conditions.
    Scan(Input),
    /// Maximum packing of edge-disjoint spanning trees.
    Trees(Input),
    /// Sweep of connected 4-vertex multigraphs with at least 4 disjoint spanning trees.
    #[command(name = "enumerate4v")]
    Enumerate4v {
        #[arg(long, default_value_t = 12)]
        min_edges: usize,
        #[arg(long, default_value_t = 13)]
        max_edges: usize,
        #[arg(long, default_value_t = 4)]
        mu_max: usize,
    },
}

fn read_document(input: &Input) -> CliResult<GraphDocument> {
    let text = match input.file.as_deref() {
        None => read_stdin()?,
        Some(p) if p == Path::new("-") => read_stdin()?,
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
    };
    mgf::parse(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn read_stdin() -> CliResult<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
    Ok(s)
}

fn run(cli: &Cli) -> CliResult<Report> {
    let cache = cli.cache.as_deref().map(Cache::open).transpose()?;
    let ctx = Context { k: cli.k, budget: cli.budget, cache };
    match &cli.command {
        Command::Weight(i) => commands::weight(&read_document(i)?, &ctx),
        Command::Contractible(i) => commands::contractible(&read_document(i)?, &ctx),
        Command::Szk(i) => commands::szk(&read_document(i)?, &ctx),
        Command::Orient { input, beta } => commands::orient(&read_document(input)?, &ctx, beta),
        Command::ModOrient(i) => commands::mod_orient(&read_document(i)?, &ctx),
        Command::Circular(i) => commands::circular(&read_document(i)?, &ctx),
        Command::Asf(i) => commands::asf(&read_document(i)?, &ctx),
        Command::Reduce { input, beta } => commands::reduce_cmd(&read_document(input)?, &ctx, beta.as_deref()),
        Command::Discharge(i) => commands::discharge_cmd(&read_document(i)?, &ctx),
        Command::Scan(i) => commands::scan(&read_document(i)?, &ctx),
        Command::Trees(i) => commands::trees(&read_document(i)?, &ctx),
        Command::Enumerate4v { min_edges, max_edges, mu_max } => {
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = cli.jobs {
                pool = pool.num_threads(j);
            }
            let pool = pool.build().map_err(|e| CliError::Input(e.to_string()))?;
            pool.install(|| commands::enumerate4v(&ctx, *min_edges, *max_edges, *mu_max))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.render_json()),
                Format::Text => print!("{}", report.render_text()),
            }
            ExitCode::from(report.verdict.exit_code())
        }
        Err(e) => {
            eprintln!("sz5: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
