use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kobayashi_lab::config::{ConfigError, ExperimentConfig, ExperimentKind};
use kobayashi_lab::runner::{run, write_outputs, RunError};

/// Numerical experiments on Kobayashi geodesics of convex domains.
///
/// Exit codes: 0 when every check passes, 1 when a check is violated,
/// 2 for usage, configuration and computation errors.
#[derive(Debug, Parser)]
#[command(name = "kobayashi-lab", version)]
struct Cli {
    /// Experiment configuration (JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the configuration seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides the output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Do not write SVG plots.
    #[arg(long, global = true)]
    no_plots: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe the configured domain and profile.
    Domain {
        #[command(subcommand)]
        action: DomainAction,
    },
    /// Evaluate the metric sandwich on the configured pairs (z = x, v = y - x).
    Metric {
        #[command(subcommand)]
        action: MetricAction,
    },
    /// Solve approximate geodesics for the configured pairs.
    Geodesic {
        #[command(subcommand)]
        action: GeodesicAction,
    },
    /// Run one family of inequality checks.
    Verify { kind: VerifyKind },
    /// Geodesic, visibility and Gehring-Hayman rows over the pair sweep.
    Sweep,
    /// Run the experiment named in the configuration.
    Run,
}

#[derive(Debug, Subcommand)]
enum DomainAction {
    Info,
}

#[derive(Debug, Subcommand)]
enum MetricAction {
    Eval,
}

#[derive(Debug, Subcommand)]
enum GeodesicAction {
    Solve,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyKind {
    Visibility,
    GehringHayman,
    LowerBounds,
    Shells,
}

impl From<VerifyKind> for ExperimentKind {
    fn from(k: VerifyKind) -> Self {
        match k {
            VerifyKind::Visibility => ExperimentKind::Visibility,
            VerifyKind::GehringHayman => ExperimentKind::GehringHayman,
            VerifyKind::LowerBounds => ExperimentKind::LowerBounds,
            VerifyKind::Shells => ExperimentKind::Shells,
        }
    }
}

fn load(cli: &Cli) -> Result<ExperimentConfig, ConfigError> {
    let path = cli.config.as_ref().ok_or_else(|| ConfigError::Invalid("--config <path> is required".into()))?;
    let mut config = ExperimentConfig::load(path)?;
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(out) = &cli.out {
        config.output.dir = out.clone();
    }
    if cli.no_plots {
        config.output.plots = false;
    }
    Ok(config)
}

fn domain_info(config: &ExperimentConfig) -> Result<(), ConfigError> {
    let domain = config.domain.build()?;
    let diameter = domain.diameter();
    let mut info = serde_json::json!({
        "label": domain.label(),
        "dim": domain.dim(),
        "m": domain.exponent(),
        "inradius": domain.inradius(),
        "diameter": diameter.value,
        "diameter_exact": diameter.exact,
        "smooth": domain.is_smooth(),
        "convex": domain.is_convex(),
    });
    if let Some(p) = &config.profile {
        let profile = p.build(&domain, &config.base_dir, config.seed)?;
        info["profile"] = serde_json::json!({
            "c_metric": profile.c_metric(),
            "x_peak": profile.x_peak(),
            "g_max": profile.g_max(),
        });
    }
    println!("{}", serde_json::to_string_pretty(&info).expect("json"));
    Ok(())
}

fn execute(cli: &Cli) -> Result<i32, RunError> {
    let mut config = load(cli)?;
    let kind = match &cli.command {
        Command::Domain { action: DomainAction::Info } => {
            domain_info(&config)?;
            return Ok(0);
        }
        Command::Metric { action: MetricAction::Eval } => ExperimentKind::MetricEval,
        Command::Geodesic { action: GeodesicAction::Solve } => ExperimentKind::Geodesic,
        Command::Verify { kind } => (*kind).into(),
        Command::Sweep => ExperimentKind::Sweep,
        Command::Run => config.experiment,
    };
    config.experiment = kind;
    let bundle = run(&config)?;
    let written = write_outputs(&bundle, &config.output.dir, &config.output.stem, config.output.plots)?;
    let s = &bundle.summary;
    println!("{}: {} rows, {} violations, {} skipped", kind.name(), s.rows, s.violations, s.skipped);
    for c in &s.constants {
        println!("  {:<24} n={:<5} min={:.6e} median={:.6e} max={:.6e}", c.id, c.n, c.min, c.median, c.max);
    }
    for f in &s.fits {
        println!("  fit {:<20} slope={:.4} ± {:.4} (n = {})", f.name, f.slope, f.stderr, f.n);
    }
    for n in &s.notes {
        println!("  note: {n}");
    }
    for p in written {
        println!("  wrote {}", p.display());
    }
    Ok(bundle.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
