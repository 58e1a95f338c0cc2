//! `rindler` — entanglement measures for a uniformly accelerated observer.
//!
//! Subcommands: `measure` (one parameter point), `sweep` (tabulated grid,
//! CSV or JSON), `check` (full invariant self-check), `unruh` (acceleration
//! to mixing angle / temperature / occupation).
//!
//! Exit codes: 0 success, 1 self-check failure, 2 usage error,
//! 3 I/O error.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rindler_cli::check::run_all_suites;
use rindler_cli::config::{
    parse_alphas, parse_config_text, parse_measures, resolve, OutputFormat, PartialConfig,
};
use rindler_cli::output::{evaluate_rows, render, render_measure_report, render_unruh_report};
use rindler_core::measures::report;
use rindler_core::unruh::{
    fd_occupation, r_from_acceleration, unruh_temperature, AccelerationSpec, PhysicalConstants,
    RindlerParams,
};
use std::f64::consts::FRAC_PI_4;
use std::path::PathBuf;

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(
    name = "rindler",
    version,
    about = "Entanglement measures for a two-mode fermionic state seen by an accelerated observer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every measure at one (alpha, r, phi) point.
    Measure(MeasureArgs),
    /// Tabulate measures over an (alpha, r) grid as CSV or JSON.
    Sweep(SweepArgs),
    /// Run every invariant suite and report pass/fail per suite.
    Check,
    /// Convert an acceleration into mixing angle, temperature, occupation.
    Unruh(UnruhArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("angle").required(true))]
struct MeasureArgs {
    /// Weight of the first superposition branch, in [0, 1].
    #[arg(long)]
    alpha: f64,
    /// Mixing angle in radians, in [0, pi/4].
    #[arg(long, group = "angle")]
    r: Option<f64>,
    /// Proper acceleration in natural units; converted to a mixing angle.
    #[arg(long, group = "angle")]
    accel: Option<f64>,
    /// Mode frequency used together with --accel.
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Relative phase between the branches, in radians.
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated branch weights, each in [0, 1].
    #[arg(long)]
    alphas: Option<String>,
    /// First mixing angle of the grid, in [0, pi/4].
    #[arg(long)]
    r_start: Option<f64>,
    /// Last mixing angle of the grid, in [0, pi/4].
    #[arg(long)]
    r_stop: Option<f64>,
    /// Number of grid rows per alpha (at least 2; endpoints included).
    #[arg(long)]
    steps: Option<usize>,
    /// Relative phase applied to every grid point, in radians.
    #[arg(long)]
    phi: Option<f64>,
    /// Comma-separated subset of entropy,negativity,purity,coherence,occupation.
    #[arg(long)]
    measures: Option<String>,
    /// Table format.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Output file path; standard output when omitted.
    #[arg(long)]
    output: Option<String>,
    /// Key-value config file; explicit flags take precedence over it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct UnruhArgs {
    /// Proper acceleration (must be positive).
    #[arg(long)]
    accel: f64,
    /// Mode frequency (must be positive).
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Unit system for the input and the reported temperature.
    #[arg(long, value_enum, default_value = "natural")]
    units: UnitsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitsArg {
    Natural,
    Si,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Measure(args) => cmd_measure(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Check => cmd_check(),
        Command::Unruh(args) => cmd_unruh(args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

/// Validates --accel/--omega and builds the acceleration description;
/// `Err` carries the already-reported exit code.
fn acceleration_flags(accel: f64, omega: f64) -> Result<AccelerationSpec, i32> {
    if !accel.is_finite() || accel <= 0.0 {
        return Err(usage_error(&format!(
            "--accel must be positive, got {accel}"
        )));
    }
    if !omega.is_finite() || omega <= 0.0 {
        return Err(usage_error(&format!(
            "--omega must be positive, got {omega}"
        )));
    }
    AccelerationSpec::new(accel, omega).map_err(|e| usage_error(&e.to_string()))
}

fn cmd_measure(args: MeasureArgs) -> i32 {
    if !args.alpha.is_finite() || !(0.0..=1.0).contains(&args.alpha) {
        return usage_error(&format!("--alpha must lie in [0, 1], got {}", args.alpha));
    }
    if !args.phi.is_finite() {
        return usage_error(&format!("--phi must be finite, got {}", args.phi));
    }
    let r = match (args.r, args.accel) {
        (Some(r), None) => {
            if !r.is_finite() || !(0.0..=FRAC_PI_4).contains(&r) {
                return usage_error(&format!("--r must lie in [0, pi/4], got {r}"));
            }
            r
        }
        (None, Some(accel)) => match acceleration_flags(accel, args.omega) {
            Ok(spec) => r_from_acceleration(&spec, &PhysicalConstants::natural()),
            Err(code) => return code,
        },
        // Unreachable: the clap group requires exactly one of --r/--accel.
        _ => return usage_error("exactly one of --r or --accel must be given"),
    };
    let params = match RindlerParams::new(args.alpha, r, args.phi) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    match report(&params) {
        Ok(rep) => {
            print!("{}", render_measure_report(&rep));
            EXIT_OK
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_sweep(args: SweepArgs) -> i32 {
    let file_layer = match &args.config {
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("error: cannot read config file {}: {e}", path.display());
                    return EXIT_IO;
                }
            };
            match parse_config_text(&text) {
                Ok(layer) => layer,
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        None => PartialConfig::default(),
    };
    let flag_layer = match flags_layer(&args) {
        Ok(layer) => layer,
        Err(code) => return code,
    };
    let cfg = match resolve(flag_layer.or(file_layer)) {
        Ok(cfg) => cfg,
        Err(e) => return usage_error(&e.to_string()),
    };
    let rows = match evaluate_rows(&cfg) {
        Ok(rows) => rows,
        Err(e) => return usage_error(&e.to_string()),
    };
    let text = render(&cfg, &rows);
    match &cfg.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text.as_bytes()) {
                eprintln!("error: cannot write output file {path}: {e}");
                return EXIT_IO;
            }
        }
        None => print!("{text}"),
    }
    EXIT_OK
}

/// Lifts the sweep flags into one settings layer; `Err` carries the
/// already-reported exit code.
fn flags_layer(args: &SweepArgs) -> Result<PartialConfig, i32> {
    let alphas = match &args.alphas {
        Some(raw) => Some(parse_alphas(raw).map_err(|e| usage_error(&e.to_string()))?),
        None => None,
    };
    let measures = match &args.measures {
        Some(raw) => Some(parse_measures(raw).map_err(|e| usage_error(&e.to_string()))?),
        None => None,
    };
    Ok(PartialConfig {
        alphas,
        r_start: args.r_start,
        r_stop: args.r_stop,
        steps: args.steps,
        phi: args.phi,
        measures,
        format: args.format.map(OutputFormat::from),
        output: args.output.clone(),
    })
}

fn cmd_check() -> i32 {
    let outcomes = run_all_suites();
    let mut failures = 0usize;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(()) => println!("pass  {}", outcome.name),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {}: {detail}", outcome.name);
            }
        }
    }
    if failures == 0 {
        println!("all {} suites passed", outcomes.len());
        EXIT_OK
    } else {
        println!("{failures} of {} suites failed", outcomes.len());
        EXIT_CHECK_FAILED
    }
}

fn cmd_unruh(args: UnruhArgs) -> i32 {
    let spec = match acceleration_flags(args.accel, args.omega) {
        Ok(spec) => spec,
        Err(code) => return code,
    };
    let (consts, label) = match args.units {
        UnitsArg::Natural => (PhysicalConstants::natural(), "natural"),
        UnitsArg::Si => (PhysicalConstants::si(), "si"),
    };
    let r = r_from_acceleration(&spec, &consts);
    let temperature = match unruh_temperature(args.accel, &consts) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    let occupation = match fd_occupation(r) {
        Ok(n) => n,
        Err(e) => return usage_error(&e.to_string()),
    };
    print!("{}", render_unruh_report(label, r, temperature, occupation));
    EXIT_OK
}
