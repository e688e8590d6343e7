mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Metric;
use error::CliError;
use report::{Format, Report};

/// Spectra of Newton non-degenerate singularities and plane curve branches.
#[derive(Parser)]
#[command(name = "spectre", version)]
struct Cli {
    /// Output file; the literal values `csv` and `json` select a format
    /// and print to stdout instead.
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of a diagram file with Milnor, symmetry and variance checks.
    Spectrum(DiagramArgs),
    /// Kouchnirenko number and the volumes V_1..V_n+1.
    Milnor(DiagramArgs),
    /// Invariants of a branch given by its semigroup generators.
    Curve(CurveArgs),
    #[command(subcommand)]
    Dist(DistCommand),
    /// Staircase of the spectral counting function against r²/2.
    Fig1 {
        #[arg(long, value_delimiter = ',', default_value = "5,9")]
        generators: Vec<u64>,
        #[arg(long, default_value = "115/100")]
        r_max: String,
        /// Number of intervals for the continuous curves.
        #[arg(long, default_value_t = 115)]
        samples: usize,
    },
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long)]
    diagram: PathBuf,
    #[arg(long, default_value_t = 1)]
    scale: i64,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct CurveArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    generators: Vec<u64>,
    /// Same as --format.
    #[arg(long, value_enum)]
    report: Option<Format>,
    #[command(subcommand)]
    sweep: Option<CurveCommand>,
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Exhaustive check of the sign at the log canonical threshold.
    Sweep {
        #[arg(long, default_value_t = 2)]
        max_g: usize,
        #[arg(long, default_value_t = 30)]
        max_gen: u64,
    },
}

#[derive(Subcommand)]
enum DistCommand {
    /// Φ_f(r): Irwin–Hall CDF minus the normalized spectral count.
    Phi {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        r: String,
    },
    /// Distance to the Irwin–Hall law along a list of scales.
    Converge {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8,16,32")]
        scales: Vec<i64>,
        #[arg(long, value_enum, default_value = "ks")]
        metric: Metric,
    },
}

/// The invocation without `--out`, so reports do not depend on where they go.
fn command_echo() -> String {
    let mut parts = Vec::new();
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--out" {
            args.next();
        } else if !a.starts_with("--out=") {
            parts.push(a);
        }
    }
    parts.join(" ")
}

fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("SPECTRE_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Input(format!("SPECTRE_THREADS must be a positive integer, got {v:?}")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn run(cli: Cli) -> Result<(Report, Format, Option<PathBuf>), CliError> {
    init_threads()?;
    let echo = command_echo();
    let (mut format, path) = match cli.out.as_deref() {
        Some("csv") => (Format::Csv, None),
        Some("json") => (Format::Json, None),
        Some(p) => (Format::Csv, Some(PathBuf::from(p))),
        None => (Format::Csv, None),
    };
    if let Some(f) = cli.format {
        format = f;
    }
    let report = match cli.command {
        Command::Spectrum(a) => commands::spectrum(echo, &a.diagram, a.scale)?,
        Command::Milnor(a) => commands::milnor(echo, &a.diagram, a.scale)?,
        Command::Curve(a) => {
            if let Some(f) = a.report {
                format = f;
            }
            match a.sweep {
                Some(CurveCommand::Sweep { max_g, max_gen }) => commands::sweep(echo, max_g, max_gen)?,
                None => commands::curve(echo, &a.generators)?,
            }
        }
        Command::Dist(DistCommand::Phi { diagram, r }) => commands::phi(echo, &diagram, &r)?,
        Command::Dist(DistCommand::Converge { diagram, scales, metric }) => {
            commands::converge(echo, &diagram, &scales, metric)?
        }
        Command::Fig1 { generators, r_max, samples } => {
            commands::fig1(echo, &generators, &r_max, samples)?
        }
    };
    Ok((report, format, path))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, format, path) = match run(cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("spectre: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = report.render(format);
    match path {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, text) {
                eprintln!("spectre: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in &report.failures {
            eprintln!("spectre: invariant failure: {f}");
        }
        ExitCode::from(1)
    }
}
