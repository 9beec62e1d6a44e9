//! Command-line front end for the certified Koebe-radius computations.
//!
//! Subcommands: `coeffs`, `certify`, `radius-table`, `boundary`, `scan`.
//! Exit codes: 0 success, 2 usage error, 3 certification undecided at the
//! precision cap, 4 I/O error.

mod output;
mod scan;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use koebe::families::{Family, FamilySpec};
use koebe::{certify_univalence, generate, min_distance, radius_table, sample_curve};
use output::{writer_for, CliError, Format};

#[derive(Parser)]
#[command(name = "koebe", version, about = "Certified Koebe-radius computations for extremal polynomial families")]
struct Cli {
    /// Working precision in bits (minimum 64)
    #[arg(long, global = true, default_value_t = 128)]
    precision: u32,

    /// Output path; stdout when omitted
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficient vector of a family member
    Coeffs {
        /// fejer | alexander | suffridge | egervary-szasz | pnew
        #[arg(long)]
        family: FamilyArg,
        /// Degree N >= 1
        #[arg(long)]
        n: u32,
        /// Suffridge index j (defaults to 1)
        #[arg(long)]
        j: Option<u32>,
    },
    /// Certify boundary-modulus monotonicity for one degree
    Certify {
        #[arg(long)]
        n: u32,
        /// Precision-escalation cap in bits
        #[arg(long, default_value_t = koebe::DEFAULT_PRECISION_CAP)]
        precision_cap: u32,
    },
    /// Koebe-radius bounds and boundary minima per degree
    RadiusTable {
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Grid size for the boundary minimum search
        #[arg(long, default_value_t = 4096)]
        grid: usize,
    },
    /// Export the boundary curve of a family member
    Boundary {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: Option<u32>,
        /// Number of curve samples (minimum 8)
        #[arg(long, default_value_t = 512)]
        count: usize,
    },
    /// Certify a range of degrees, one JSON line per degree
    Scan {
        #[arg(long, default_value_t = 2)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Skip degrees already present in the output file
        #[arg(long)]
        resume: bool,
        /// Worker threads for the scan (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Precision-escalation cap in bits
        #[arg(long, default_value_t = koebe::DEFAULT_PRECISION_CAP)]
        precision_cap: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Fejer,
    Alexander,
    Suffridge,
    EgervarySzasz,
    Pnew,
}

impl FamilyArg {
    fn to_spec(self, n: u32, j: Option<u32>) -> FamilySpec {
        let family = match self {
            FamilyArg::Fejer => Family::Fejer,
            FamilyArg::Alexander => Family::Alexander,
            FamilyArg::Suffridge => Family::Suffridge { j: j.unwrap_or(1) },
            FamilyArg::EgervarySzasz => Family::EgervarySzasz,
            FamilyArg::Pnew => Family::PNew,
        };
        FamilySpec { family, degree: n }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("I/O error: {msg}");
            ExitCode::from(4)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if cli.precision < 64 {
        return Err(CliError::Usage("precision must be at least 64 bits".into()));
    }
    let prec = cli.precision;
    match cli.command {
        Command::Coeffs { family, n, j } => {
            let spec = family.to_spec(n, j);
            let poly = generate(&spec, prec).map_err(CliError::usage_from)?;
            let mut w = writer_for(&cli.output)?;
            output::write_coeffs(&mut w, &spec, &poly, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { n, precision_cap } => {
            let started = std::time::Instant::now();
            let cert = certify_univalence(n, precision_cap).map_err(CliError::usage_from)?;
            eprintln!("certify N={n}: {:?} in {:.2?}", cert.verdict, started.elapsed());
            let mut w = writer_for(&cli.output)?;
            output::write_json_line(&mut w, &cert)?;
            if cert.is_certified() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::RadiusTable { from, to, grid } => {
            if from < 1 || to < from {
                return Err(CliError::Usage("range must satisfy 1 <= from <= to".into()));
            }
            let rows = radius_table(to, prec, grid).map_err(CliError::usage_from)?;
            let rows = &rows[(from as usize - 1)..];
            let mut w = writer_for(&cli.output)?;
            output::write_radius_table(&mut w, rows, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundary { family, n, j, count } => {
            let spec = family.to_spec(n, j);
            let poly = generate(&spec, prec).map_err(CliError::usage_from)?;
            let mut curve = sample_curve(&poly, count).map_err(CliError::usage_from)?;
            curve.family = Some(spec);
            let mut w = writer_for(&cli.output)?;
            match cli.format {
                Format::Svg => {
                    let tol = koebe::boundary::default_refine_tol(prec);
                    let min = min_distance(&poly, 4096, &tol).map_err(CliError::internal_from)?;
                    svg::write_curve(&mut w, &curve, min.distance.to_f64())?;
                }
                other => output::write_curve(&mut w, &curve, other)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { from, to, resume, jobs, precision_cap } => {
            if from < 1 || to < from {
                return Err(CliError::Usage("range must satisfy 1 <= from <= to".into()));
            }
            if resume && cli.output.is_none() {
                return Err(CliError::Usage("--resume requires --output".into()));
            }
            scan::run_scan(&cli.output, from, to, resume, jobs, precision_cap)
        }
    }
}
