use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gpi_cli::{parse_assignment, parse_settings, render, run, CliError, JobConfig, Settings};

#[derive(Parser)]
#[command(name = "gpi", version, about = "Generalized point interactions on the line")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output encoding.
    #[arg(long, value_enum, global = true)]
    format: Option<OutputFormat>,

    /// Key-value file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Parametrization name: greek, halfline, inverse, transfer, carreau,
    /// seba, chernoff-hughes or separated.
    #[arg(long, global = true)]
    scheme: Option<String>,

    /// Scheme field or other setting, e.g. `-p alpha=-2`.
    #[arg(short = 'p', long = "param", value_name = "KEY=VALUE", global = true)]
    params: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Every representable parametrization, symmetry flags and det 𝒜.
    Convert,
    /// Roots of the resolvent denominator with their classification.
    BoundStates,
    /// Reflection and transmission amplitudes on a uniform k-grid.
    Scatter(ScatterArgs),
    /// Geometric phase along the loop c = |c| e^{iξ} at a = b.
    Berry(BerryArgs),
    /// Bands, gaps and asymptotic regime of the periodic array.
    Bands(BandArgs),
}

#[derive(Args)]
struct ScatterArgs {
    #[arg(long, allow_negative_numbers = true)]
    kmin: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    kmax: Option<String>,
    #[arg(long)]
    steps: Option<String>,
}

#[derive(Args)]
struct BerryArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    cmod: Option<String>,
    /// Points on the loop.
    #[arg(long)]
    samples: Option<String>,
    /// plus or minus
    #[arg(long)]
    branch: Option<String>,
}

#[derive(Args)]
struct BandArgs {
    /// Lattice spacing.
    #[arg(long, allow_negative_numbers = true)]
    ell: Option<String>,
    /// Highest band index to extract.
    #[arg(long)]
    mmax: Option<String>,
    /// Band indices to fit, LO:HI.
    #[arg(long)]
    fit_range: Option<String>,
}

fn settings(cli: &Cli) -> Result<(&'static str, Settings), CliError> {
    let mut s = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            parse_settings(&text)?
        }
        None => Settings::new(),
    };
    for p in &cli.params {
        let (k, v) = parse_assignment(p)?;
        s.insert(k, v);
    }
    if let Some(name) = &cli.scheme {
        s.insert("scheme".into(), name.clone());
    }
    if let Some(f) = cli.format {
        let f = match f {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        };
        s.insert("format".into(), f.into());
    }
    let mut set = |k: &str, v: &Option<String>| {
        if let Some(v) = v {
            s.insert(k.into(), v.clone());
        }
    };
    let task = match &cli.command {
        Command::Convert => "convert",
        Command::BoundStates => "bound-states",
        Command::Scatter(a) => {
            set("kmin", &a.kmin);
            set("kmax", &a.kmax);
            set("steps", &a.steps);
            "scatter"
        }
        Command::Berry(a) => {
            set("a", &a.a);
            set("cmod", &a.cmod);
            set("samples", &a.samples);
            set("branch", &a.branch);
            "berry"
        }
        Command::Bands(a) => {
            set("ell", &a.ell);
            set("mmax", &a.mmax);
            set("fit_range", &a.fit_range);
            "bands"
        }
    };
    Ok((task, s))
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let (task, s) = settings(cli)?;
    let job = JobConfig::from_settings(task, &s)?;
    let tables = run(&job)?;
    Ok(render(&tables, job.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gpi: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
