//! Command-line front-end. One invocation runs one analysis and writes one
//! deterministic JSON (or CSV) report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hermite_zeros::cli::{self, CommandKind, OutputFormat, RunConfig};
use hermite_zeros::hermite::Normalization;

#[derive(Parser)]
#[command(
    name = "hermite-zeros",
    version,
    about = "Certified zero analysis of linear combinations of Hermite polynomials"
)]
struct Cli {
    /// Load the full run configuration from a JSON document instead of flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Clone, Default)]
struct SpecArgs {
    /// Combination coefficients gamma_0..gamma_K, e.g. "1,0,1". Rationals
    /// like "1/3" are allowed.
    #[arg(long, value_delimiter = ',')]
    gamma: Option<Vec<String>>,

    /// Normalization for combinations: standard or appell.
    #[arg(long)]
    norm: Option<Normalization>,

    /// Generalized-family parameter prefix phi_1..phi_m.
    #[arg(long, value_delimiter = ',')]
    phi: Option<Vec<String>>,

    /// Generalized-family parameter prefix psi_1..psi_m (defaults to zeros).
    #[arg(long, value_delimiter = ',')]
    psi: Option<Vec<String>>,
}

#[derive(Args, Clone, Default)]
struct OutputArgs {
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Report format: json or csv (csv only for asymptotics/threshold).
    #[arg(long, default_value = "json")]
    format: String,

    /// Refinement precision in bits (default 53, or HERMITE_ZEROS_PRECISION_BITS).
    #[arg(long)]
    precision_bits: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a polynomial and print its exact coefficients.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        /// Degree index n.
        #[arg(long)]
        n: Option<usize>,
        /// Multi-index n_1..n_r for a multiple Hermite polynomial.
        #[arg(long, value_delimiter = ',')]
        multi_n: Option<Vec<usize>>,
        /// Distinct parameters c_1..c_r for a multiple Hermite polynomial.
        #[arg(long, value_delimiter = ',')]
        multi_c: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Certified zero report (counts, isolating intervals, multiplicities).
    Roots {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Certified interlacing verdict for consecutive members (n vs n-1).
    Interlace {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Turan inequality check on the triple (n-2, n-1, n).
    Turan {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Find the non-real-count threshold of an Appell combination.
    Threshold {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest n to sweep.
        #[arg(long, default_value_t = 60)]
        ceiling: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Pencil q_n - theta q_{n-1} thresholds over sampled theta.
    Pencil {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 60)]
        ceiling: usize,
        /// Theta samples (default: -10,-1,-1/3,1/3,1,10).
        #[arg(long, value_delimiter = ',')]
        thetas: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare observed sign counts against the predicted law.
    Signs {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evidence probe for equal positive/negative counts (all-non-real P).
    Conjecture {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Limit checks: mehler, combination-mehler, scaling, central, edge,
    /// nonreal, semicircle.
    Asymptotics {
        #[command(flatten)]
        spec: SpecArgs,
        /// Which limit to check.
        #[arg(long)]
        check: String,
        #[arg(long)]
        n: Option<usize>,
        /// Grid of n values, e.g. "10,20,40".
        #[arg(long, value_delimiter = ',')]
        n_grid: Option<Vec<usize>>,
        /// Evaluation point for Mehler-Heine checks.
        #[arg(long)]
        x: Option<f64>,
        /// Scaling point "re" or "re,im" for the scaling check.
        #[arg(long)]
        z: Option<String>,
        /// Central-zero offset j.
        #[arg(long)]
        j: Option<i64>,
        /// Test function for the semicircle statistic: 1, x^2, abs,
        /// bump:center,halfwidth,ramp.
        #[arg(long)]
        f: Option<String>,
        /// Mehler-Heine parity: even or odd.
        #[arg(long)]
        parity: Option<String>,
        /// Override the tolerance for every emitted check.
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the full acceptance suite and print a pass/fail table.
    Selftest {
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(format!("unknown format {other:?} (expected json or csv)")),
    }
}

fn apply_spec(config: &mut RunConfig, spec: SpecArgs) {
    config.gamma = spec.gamma;
    config.normalization = spec.norm;
    config.phi = spec.phi;
    config.psi = spec.psi;
}

fn apply_output(config: &mut RunConfig, out: OutputArgs) -> Result<(), String> {
    config.output = out.output;
    config.format = parse_format(&out.format)?;
    config.precision_bits = out.precision_bits;
    Ok(())
}

fn build_config(command: Command) -> Result<RunConfig, String> {
    let mut config;
    match command {
        Command::Build {
            spec,
            n,
            multi_n,
            multi_c,
            out,
        } => {
            config = RunConfig::new(CommandKind::Build);
            apply_spec(&mut config, spec);
            config.n = n;
            config.multi_n = multi_n;
            config.multi_c = multi_c;
            apply_output(&mut config, out)?;
        }
        Command::Roots { spec, n, out } => {
            config = RunConfig::new(CommandKind::Roots);
            apply_spec(&mut config, spec);
            config.n = Some(n);
            apply_output(&mut config, out)?;
        }
        Command::Interlace { spec, n, out } => {
            config = RunConfig::new(CommandKind::Interlace);
            apply_spec(&mut config, spec);
            config.n = Some(n);
            apply_output(&mut config, out)?;
        }
        Command::Turan { spec, n, out } => {
            config = RunConfig::new(CommandKind::Turan);
            apply_spec(&mut config, spec);
            config.n = Some(n);
            apply_output(&mut config, out)?;
        }
        Command::Threshold { spec, ceiling, out } => {
            config = RunConfig::new(CommandKind::Threshold);
            apply_spec(&mut config, spec);
            config.ceiling = Some(ceiling);
            apply_output(&mut config, out)?;
        }
        Command::Pencil {
            spec,
            ceiling,
            thetas,
            out,
        } => {
            config = RunConfig::new(CommandKind::Pencil);
            apply_spec(&mut config, spec);
            config.ceiling = Some(ceiling);
            config.thetas = thetas;
            apply_output(&mut config, out)?;
        }
        Command::Signs {
            spec,
            n_min,
            n_max,
            out,
        } => {
            config = RunConfig::new(CommandKind::Signs);
            apply_spec(&mut config, spec);
            config.n_min = n_min;
            config.n_max = Some(n_max);
            apply_output(&mut config, out)?;
        }
        Command::Conjecture {
            spec,
            n_min,
            n_max,
            out,
        } => {
            config = RunConfig::new(CommandKind::Conjecture);
            apply_spec(&mut config, spec);
            config.n_min = n_min;
            config.n_max = Some(n_max);
            apply_output(&mut config, out)?;
        }
        Command::Asymptotics {
            spec,
            check,
            n,
            n_grid,
            x,
            z,
            j,
            f,
            parity,
            tolerance,
            out,
        } => {
            config = RunConfig::new(CommandKind::Asymptotics);
            apply_spec(&mut config, spec);
            config.check = Some(check);
            config.n = n;
            config.n_grid = n_grid;
            config.x = x;
            config.z = z;
            config.j = j;
            config.f = f;
            config.parity = parity;
            config.tolerance = tolerance;
            apply_output(&mut config, out)?;
        }
        Command::Selftest { out } => {
            config = RunConfig::new(CommandKind::Selftest);
            apply_output(&mut config, out)?;
        }
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = if let Some(path) = &cli.config {
        match RunConfig::from_json_file(path) {
            Ok(config) => config,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(cli::EXIT_INVALID as u8);
            }
        }
    } else {
        match cli.command {
            Some(command) => match build_config(command) {
                Ok(config) => config,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(cli::EXIT_INVALID as u8);
                }
            },
            None => {
                eprintln!("error: provide a subcommand or --config FILE (see --help)");
                return ExitCode::from(cli::EXIT_INVALID as u8);
            }
        }
    };
    match cli::run(&config) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code_for_error(&e) as u8)
        }
    }
}
