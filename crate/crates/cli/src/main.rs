//! Command-line wrapper: parses arguments into a RunConfig, executes it,
//! and maps the outcome onto process exit codes (0 ok, 2 failed check,
//! 1 usage or computation error).

use anyhow::{anyhow, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use jetbound_cli::{
    execute, parse_delta, parse_output, parse_weights, CommandKind, RunConfig, WeightSpec,
    BUDGET_ENV, DEFAULT_BUDGET,
};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "jetbound",
    version,
    about = "Exact intersection-polynomial degree bounds for weighted jet towers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Fiber dimension n.
    #[arg(long)]
    n: usize,
    /// Tower height; defaults to the number of weights.
    #[arg(long)]
    kappa: Option<usize>,
    /// "geometric" (a_i = n^(n-i)) or a comma-separated integer list.
    #[arg(long, default_value = "geometric")]
    weights: String,
    /// "reference" (1 / (35 n^n)) or an exact rational like "1/500".
    #[arg(long, default_value = "reference")]
    delta: String,
    /// Truncated-product term budget; env JETBOUND_BUDGET, then 100000.
    #[arg(long)]
    budget: Option<usize>,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    output: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WindowArgs {
    /// Override the lower end of every t-variable window.
    #[arg(long)]
    t_lo: Option<i32>,
    /// Override the upper end of every t-variable window.
    #[arg(long)]
    t_hi: Option<i32>,
    /// Override the weighted length cap.
    #[arg(long)]
    l_cap: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Full polynomial, positivity threshold, and integer root bound.
    Polynomial {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Simplified coefficients, scaled root bound, envelope threshold.
    Tilde {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Full polynomial threshold compared to the headline constants.
    Bound {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Hypothesis checks plus the inequality certification suite.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Verification summary rows over a range of n (geometric weights).
    Sweep {
        /// First n of the range, inclusive.
        #[arg(long)]
        n_from: usize,
        /// Last n of the range, inclusive.
        #[arg(long)]
        n_to: usize,
        /// "reference" or an exact rational, applied to every row.
        #[arg(long, default_value = "reference")]
        delta: String,
        /// Truncated-product term budget; env JETBOUND_BUDGET, then 100000.
        #[arg(long)]
        budget: Option<usize>,
        /// Output format: json or csv.
        #[arg(long, default_value = "json")]
        output: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn budget_from(flag: Option<usize>) -> Result<usize> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| anyhow!("invalid {BUDGET_ENV} value {s:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(e.into()),
    }
}

fn config_from(kind: CommandKind, common: CommonArgs, window: Option<WindowArgs>) -> Result<RunConfig> {
    let mut config = RunConfig::new(kind, common.n);
    config.kappa = common.kappa;
    config.weights = parse_weights(&common.weights)?;
    config.delta = parse_delta(&common.delta)?;
    config.budget = budget_from(common.budget)?;
    config.output = parse_output(&common.output)?;
    config.out = common.out;
    if let Some(window) = window {
        config.t_lo = window.t_lo;
        config.t_hi = window.t_hi;
        config.length_cap = window.l_cap;
    }
    Ok(config)
}

fn run(cli: Cli) -> Result<i32> {
    let config = match cli.command {
        Command::Polynomial { common, window } => {
            config_from(CommandKind::Polynomial, common, Some(window))?
        }
        Command::Tilde { common } => config_from(CommandKind::Tilde, common, None)?,
        Command::Bound { common, window } => {
            config_from(CommandKind::Bound, common, Some(window))?
        }
        Command::Verify { common } => config_from(CommandKind::Verify, common, None)?,
        Command::Sweep {
            n_from,
            n_to,
            delta,
            budget,
            output,
            out,
        } => {
            let mut config = RunConfig::new(CommandKind::Sweep, n_from);
            config.n_to = Some(n_to);
            config.weights = WeightSpec::Geometric;
            config.delta = parse_delta(&delta)?;
            config.budget = budget_from(budget)?;
            config.output = parse_output(&output)?;
            config.out = out;
            config
        }
    };
    let report = execute(&config)?;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    jetbound_cli::emit(&report, config.out.as_deref(), &mut lock)?;
    lock.flush()?;
    Ok(report.exit_code)
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
