//! Command-line access to the DCell construction and certification toolkit.
//!
//! Exit codes: 0 success, 1 a recomputed claim failed, 2 bad usage or
//! validation (including refused budgets), 3 a decision procedure ran out
//! of budget before reaching a verdict.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dcell::adjacency::neighbors;
use dcell::certify::{decide, exhaustive_orbits, DecideBudget, EXHAUSTIVE_VERTEX_CAP};
use dcell::claims::paper_check;
use dcell::cycles::{cycles_through, CycleBackend};
use dcell::export;
use dcell::topology::DEFAULT_VERTEX_BUDGET;
use dcell::{Params, Topology, VertexLabel};

#[derive(Debug)]
enum CliError {
    Lib(dcell::Error),
    Io(io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => e.fmt(f),
            CliError::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl From<dcell::Error> for CliError {
    fn from(e: dcell::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(dcell::Error::Inconclusive(_)) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }

    /// Downstream readers such as `head` close the pipe early; stopping
    /// then is normal operation, not a failure worth reporting.
    fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe)
    }
}

#[derive(Parser)]
#[command(
    name = "dcell",
    version,
    about = "Build DCell topologies and certify their symmetry properties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize D_{k,n} and write it as an edge list, dot, or json.
    Gen {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse to materialize more vertices than this.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: u64,
    },
    /// Print a vertex's neighbors, one `level<TAB>label` line per edge,
    /// levels ascending. Works on labels alone, at any size.
    Neighbors {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Vertex label, most significant coordinate first, e.g. 3,1,1.
        #[arg(long)]
        vertex: String,
    },
    /// Count simple cycles of a given length through a vertex; the first
    /// output line is the count, `--list` appends one cycle per line.
    Cycles {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Vertex label, most significant coordinate first.
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 6)]
        length: u32,
        /// Also list the cycles themselves.
        #[arg(long)]
        list: bool,
    },
    /// Decide vertex transitivity and print the verdict with its evidence
    /// as json.
    Certify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Also compute the exact automorphism orbit count (small
        /// instances only).
        #[arg(long)]
        exhaustive: bool,
        /// Vertex budget for materialization and verification.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: u64,
    },
    /// Recompute every documented figure and print the claim report as
    /// json; exits 1 if any claim fails.
    PaperCheck {
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn open_out(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen { k, n, format, out, budget } => {
            let topology = Topology::build(&Params::new(k, n)?, budget)?;
            let mut sink = open_out(out.as_ref())?;
            match format {
                Format::Edgelist => export::write_edgelist(&topology, &mut sink)?,
                Format::Dot => export::write_dot(&topology, &mut sink)?,
                Format::Json => export::write_json(&topology, &mut sink)?,
            }
            sink.flush()?;
        }
        Command::Neighbors { k, n, vertex } => {
            let params = Params::new(k, n)?;
            let vertex: VertexLabel = vertex.parse()?;
            let mut sink = io::stdout().lock();
            for (neighbor, level) in neighbors(&vertex, &params)? {
                writeln!(sink, "{level}\t{neighbor}")?;
            }
        }
        Command::Cycles { k, n, vertex, length, list } => {
            let params = Params::new(k, n)?;
            let vertex: VertexLabel = vertex.parse()?;
            let query = cycles_through(CycleBackend::Implicit(&params), &vertex, length, list)?;
            let mut sink = io::stdout().lock();
            writeln!(sink, "{}", query.count)?;
            for witness in query.witnesses.unwrap_or_default() {
                writeln!(sink, "{witness}")?;
            }
        }
        Command::Certify { k, n, exhaustive, budget } => {
            let params = Params::new(k, n)?;
            let decide_budget = DecideBudget { vertex_budget: budget, ..DecideBudget::default() };
            let mut verdict = decide(&params, &decide_budget)?;
            if exhaustive {
                let topology = Topology::build(&params, budget)?;
                let orbits = exhaustive_orbits(&topology, EXHAUSTIVE_VERTEX_CAP)?;
                verdict.orbits = Some(orbits.block_count());
            }
            println!("{}", verdict.to_json_pretty());
        }
        Command::PaperCheck { out } => {
            let report = paper_check()?;
            let mut sink = open_out(out.as_ref())?;
            writeln!(sink, "{}", report.to_json_pretty())?;
            sink.flush()?;
            if !report.all_pass() {
                for id in report.failing_ids() {
                    eprintln!("FAIL {id}");
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
