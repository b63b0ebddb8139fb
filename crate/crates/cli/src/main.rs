//! `unigraph`: recognize unigraphs, check and build unigraphic edge colorings,
//! and compute unigraph numbers from edge-list files.

mod commands;
mod report;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::CliError;
use report::{Report, Status};

/// Environment variable holding the worker count for parallel searches.
const THREADS_VAR: &str = "UNIGRAPH_THREADS";

#[derive(Parser)]
#[command(
    name = "unigraph",
    version,
    about = "Unigraph decompositions of graphs"
)]
struct Args {
    /// Report layout: `human` or the line-delimited `machine` layout.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is a unigraph, with a witness when it is not.
    Recognize {
        graph: PathBuf,
        /// Write the witness realization as an edge list.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Check that a coloring is unigraphic, and optionally strongly unigraphic.
    CheckColoring {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        strong: bool,
    },
    /// Exact unigraph number (and strong number) with bounds, per component.
    Decompose {
        graph: PathBuf,
        /// Also compute the strong unigraph number.
        #[arg(long)]
        strong: bool,
        /// Only the cheap bounds; no exhaustive search.
        #[arg(long)]
        bounds_only: bool,
        /// Write the optimal coloring as `u v c` lines.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Unigraph number of a tree through a minimum edge dominating set.
    Tree {
        graph: PathBuf,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Star coloring from a vertex cover, minimum unless `--cover` is given.
    StarColoring {
        graph: PathBuf,
        /// Comma-separated cover vertices; the order fixes the colors.
        #[arg(long, conflicts_with = "greedy")]
        cover: Option<String>,
        /// Use the greedy 2-approximate cover instead of the exact minimum.
        #[arg(long)]
        greedy: bool,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Write the graph, optionally colored, in DOT format.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Output path, or `-` for standard output.
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads = value
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "{THREADS_VAR} must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot start {threads} workers: {e}")))
}

fn run(command: &Command, report: &mut Report) -> Result<Option<String>, CliError> {
    configure_threads()?;
    match command {
        Command::Recognize { graph, witness_out } => {
            commands::recognize(report, graph, witness_out.as_deref())
        }
        Command::CheckColoring {
            graph,
            coloring,
            strong,
        } => commands::check_coloring(report, graph, coloring, *strong),
        Command::Decompose {
            graph,
            strong,
            bounds_only,
            coloring_out,
        } => commands::decompose(
            report,
            graph,
            *strong,
            *bounds_only,
            coloring_out.as_deref(),
        ),
        Command::Tree {
            graph,
            coloring_out,
        } => commands::tree(report, graph, coloring_out.as_deref()),
        Command::StarColoring {
            graph,
            cover,
            greedy,
            coloring_out,
        } => commands::star_coloring(
            report,
            graph,
            cover.as_deref(),
            *greedy,
            coloring_out.as_deref(),
        ),
        Command::ExportDot {
            graph,
            coloring,
            out,
        } => {
            return commands::export_dot(report, graph, coloring.as_deref(), out);
        }
    }?;
    Ok(None)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let mut report = Report::new(echo.join(" "));
    let start = Instant::now();
    let outcome = run(&args.command, &mut report);
    report.elapsed = start.elapsed();
    match outcome {
        Ok(Some(dot)) => {
            print!("{dot}");
            return ExitCode::SUCCESS;
        }
        Ok(None) => {}
        Err(e) => report.fail(e.status(), e.to_string()),
    }
    let mut stdout = std::io::stdout().lock();
    let _ = match args.format {
        Format::Machine => stdout.write_all(report.render_machine().as_bytes()),
        Format::Human if report.status == Status::Invalid => {
            eprint!("{}", report.render_human());
            Ok(())
        }
        Format::Human => stdout.write_all(report.render_human().as_bytes()),
    };
    ExitCode::from(report.status.exit_code() as u8)
}
