//! `lofree` binary: flag parsing, config resolution, dispatch, exit codes.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lofree_cli::commands::{cmd_asympt, cmd_count, cmd_oracle, cmd_spectral, CmdOutput};
use lofree_cli::config::{
    parse_flavor, parse_range_u16, parse_range_u64, CliError, Command, Format, RunConfig,
};
use lofree_cli::output::emit;
use lofree_cli::report::run_report;

#[derive(Parser)]
#[command(
    name = "lofree",
    version,
    about = "Exact counting, enumeration, and spectral analysis of words in locally free groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Group flavor: lf1, lf2, free1, or free2.
    #[arg(long)]
    flavor: Option<String>,

    /// Single lattice size n.
    #[arg(long, conflicts_with = "n_range")]
    n: Option<u16>,

    /// Inclusive size range A:B.
    #[arg(long, value_name = "A:B")]
    n_range: Option<String>,

    /// Single word radius mu.
    #[arg(long, conflicts_with = "mu_range")]
    mu: Option<u64>,

    /// Inclusive radius range A:B.
    #[arg(long, value_name = "A:B")]
    mu_range: Option<String>,

    /// Largest descending-run count for asymptotic tables.
    #[arg(long)]
    m_max: Option<u64>,

    /// Include the m = 0 term in assembled counts (the default).
    #[arg(long, overrides_with = "no_include_m0")]
    include_m0: bool,

    /// Exclude the m = 0 term from assembled counts.
    #[arg(long, overrides_with = "include_m0")]
    no_include_m0: bool,

    /// Convergence tolerance for iterative spectral computations.
    #[arg(long)]
    tol: Option<f64>,

    /// Stored-element cap for graph walks (default 10000000; the
    /// LOFREE_CAP environment variable overrides this default).
    #[arg(long)]
    cap: Option<usize>,

    /// Output format: csv, json, or table.
    #[arg(long)]
    format: Option<String>,

    /// Output file (single-table commands) or directory (report).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Seed for randomized property checks.
    #[arg(long)]
    seed: Option<u64>,

    /// Flat key = value config file, applied below CLI flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Sub {
    /// Exact nonequivalent-word counts, one row per (n, mu).
    Count(Common),
    /// Cayley-graph spheres compared against assembled counts.
    Oracle(Common),
    /// Transfer-operator spectra, 1D closed forms, 2D roots.
    Spectral(Common),
    /// Asymptotic formulas next to exact counts, log scale.
    Asympt(Common),
    /// Run the acceptance suite into a CSV bundle.
    Report {
        #[command(flatten)]
        common: Common,
        /// Reduced small-instance suite.
        #[arg(long)]
        quick: bool,
        /// Build the bundle twice and require byte equality.
        #[arg(long)]
        self_check: bool,
    },
}

/// Resolve precedence: defaults, then LOFREE_CAP, then the config file,
/// then CLI flags.
fn resolve(
    command: Command,
    common: &Common,
    quick: bool,
    self_check: bool,
) -> Result<RunConfig, CliError> {
    let mut config = RunConfig::defaults(command);
    let env_cap = std::env::var("LOFREE_CAP").ok();
    config.apply_env(env_cap.as_deref())?;
    if let Some(path) = &common.config {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        config.apply_config_text(&text)?;
    }
    if let Some(f) = &common.flavor {
        config.flavor = Some(parse_flavor(f)?);
    }
    if let Some(n) = common.n {
        config.n_range = Some((n, n));
    }
    if let Some(r) = &common.n_range {
        config.n_range = Some(parse_range_u16("--n-range", r)?);
    }
    if let Some(mu) = common.mu {
        config.mu_range = Some((mu, mu));
    }
    if let Some(r) = &common.mu_range {
        config.mu_range = Some(parse_range_u64("--mu-range", r)?);
    }
    if let Some(m) = common.m_max {
        config.m_max = Some(m);
    }
    if common.include_m0 {
        config.include_m0 = true;
    }
    if common.no_include_m0 {
        config.include_m0 = false;
    }
    if let Some(tol) = common.tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(CliError::usage(format!("--tol must be positive, got {tol}")));
        }
        config.tol = tol;
    }
    if let Some(cap) = common.cap {
        config.cap = cap;
    }
    if let Some(f) = &common.format {
        config.format = Format::parse(f)?;
    }
    if let Some(out) = &common.out {
        config.out = Some(out.clone());
    }
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    if quick {
        config.quick = true;
    }
    if self_check {
        config.self_check = true;
    }
    Ok(config)
}

fn emit_table(config: &RunConfig, out: CmdOutput) -> Result<i32, CliError> {
    emit(config.out.as_deref(), &out.table.render(config.format))?;
    for line in &out.summary {
        eprintln!("{line}");
    }
    Ok(out.exit)
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match &cli.command {
        Sub::Count(common) => {
            let config = resolve(Command::Count, common, false, false)?;
            emit_table(&config, cmd_count(&config)?)
        }
        Sub::Oracle(common) => {
            let config = resolve(Command::Oracle, common, false, false)?;
            emit_table(&config, cmd_oracle(&config)?)
        }
        Sub::Spectral(common) => {
            let config = resolve(Command::Spectral, common, false, false)?;
            emit_table(&config, cmd_spectral(&config)?)
        }
        Sub::Asympt(common) => {
            let config = resolve(Command::Asympt, common, false, false)?;
            emit_table(&config, cmd_asympt(&config)?)
        }
        Sub::Report {
            common,
            quick,
            self_check,
        } => {
            let config = resolve(Command::Report, common, *quick, *self_check)?;
            let outcome = run_report(&config)?;
            for line in &outcome.lines {
                eprintln!("{line}");
            }
            Ok(outcome.exit)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
