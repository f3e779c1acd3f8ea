//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error from the library, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::angle::Angle;
use crate::error::Error;
use crate::fmt::{json_str, sig17};
use crate::geometry::{construct_points, ConstructionConfig, LineId};
use crate::kernels::{
    halfangle_free_sum, lagrange_sum, naive_trig_sum, singular_proximity, sum_auto, Family,
    FullForm, Method, SumSpec, DEFAULT_FALLBACK_THRESHOLD,
};
use crate::orbit::{orbit_samples, OrbitFormat};
use crate::timing::run_bench;
use crate::verify::{residual_sweep_with, GridSpec, Pair, SweepOptions};

/// Environment variable overriding the default fallback threshold of `sum`.
pub const THRESHOLD_ENV: &str = "TRIGSUM_THRESHOLD";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trigsum",
    version,
    about = "Closed-form cosine sums, the two-line construction, and their verification"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Write output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the two-line construction and print its points
    Construct(ConstructArgs),
    /// Evaluate a cosine sum
    Sum(SumArgs),
    /// Residual sweep between two routes to the same sum
    Verify(VerifyArgs),
    /// Sample the orbit of A_n over an angle range
    Orbit(OrbitArgs),
    /// Time the naive sum against the closed form
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    fn from_extension(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            "svg" => Some(Format::Svg),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StartLine {
    X,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Lagrange,
    Halfangle,
    Auto,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Full,
    Even,
    Odd,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Angle between the lines, radians
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Number of points after A_0
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "x")]
    pub start_line: StartLine,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    /// Angle, radians
    #[arg(long, allow_negative_numbers = true)]
    pub phi: f64,
    /// Upper index of the sum
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: SumMethod,
    /// Fallback threshold on the denominator magnitude (auto only)
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long, value_enum, default_value = "full")]
    pub family: FamilyArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub pair: String,
    #[arg(long, allow_negative_numbers = true)]
    pub angle_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub angle_max: f64,
    #[arg(long)]
    pub steps: usize,
    /// Comma-separated counts; `a..b` expands to the inclusive range
    #[arg(long)]
    pub counts: String,
    #[arg(long, default_value_t = 0.0)]
    pub guard: f64,
    /// Emit per-point CSV rows instead of the JSON summary
    #[arg(long)]
    pub rows: bool,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub alpha_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = std::f64::consts::TAU)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 1024)]
    pub steps: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub repeats: usize,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Parse `1,2,5..8` into `[1, 2, 5, 6, 7, 8]`.
pub fn parse_counts(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| format!("bad count '{item}'"))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| format!("bad count '{item}'"))?;
            if a > b {
                return Err(format!("empty range '{item}'"));
            }
            out.extend(a..=b);
        } else {
            out.push(item.parse().map_err(|_| format!("bad count '{item}'"))?);
        }
    }
    if out.is_empty() {
        return Err("no counts given".into());
    }
    if out.contains(&0) {
        return Err("counts must be positive".into());
    }
    Ok(out)
}

fn angle(name: &str, v: f64) -> Result<Angle, Failure> {
    Angle::new(v).or_else(|_| usage(format!("--{name} must be a finite number of radians")))
}

/// Threshold from the flag, then the environment, then the default.
fn resolve_threshold(flag: Option<f64>, env: Option<String>) -> Result<f64, Failure> {
    let t = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => match s.trim().parse::<f64>() {
            Ok(t) => t,
            Err(_) => return usage(format!("{THRESHOLD_ENV}='{s}' is not a number")),
        },
        (None, None) => DEFAULT_FALLBACK_THRESHOLD,
    };
    if !(t > 0.0 && t.is_finite()) {
        return usage(format!("threshold must be positive, got {t}"));
    }
    Ok(t)
}

fn sum_json(value: f64, method: Method, proximity: f64) -> String {
    format!(
        "{{\"value\":{},\"method\":{},\"singular_proximity\":{}}}",
        sig17(value),
        json_str(method.name()),
        sig17(proximity)
    )
}

fn cmd_construct(a: &ConstructArgs, out: Option<&Path>) -> Result<Vec<u8>, Failure> {
    let format = a
        .format
        .or_else(|| out.and_then(Format::from_extension))
        .unwrap_or(Format::Csv);
    if format == Format::Svg {
        return usage("construct supports --format csv|json");
    }
    if a.n < 1 {
        return usage("--n must be at least 1");
    }
    let start = match a.start_line {
        StartLine::X => LineId::LineX,
        StartLine::E => LineId::LineE,
    };
    let cfg = ConstructionConfig::new(angle("alpha", a.alpha)?, a.n).start_line(start);
    let seq = construct_points(&cfg)?;
    Ok(match format {
        Format::Json => format!("{}\n", seq.to_json()),
        _ => seq.to_csv(),
    }
    .into_bytes())
}

fn cmd_sum(a: &SumArgs, env_threshold: Option<String>) -> Result<Vec<u8>, Failure> {
    if a.m < 1 {
        return usage("--m must be at least 1");
    }
    let phi = angle("phi", a.phi)?;
    let family = match a.family {
        FamilyArg::Full => Family::Full,
        FamilyArg::Even => Family::Even,
        FamilyArg::Odd => Family::Odd,
    };
    let spec = SumSpec::new(family, phi, a.m)?;
    if a.threshold.is_some() && a.method != SumMethod::Auto {
        return usage("--threshold only applies to --method auto");
    }
    if family != Family::Full && matches!(a.method, SumMethod::Lagrange | SumMethod::Halfangle) {
        return usage("--method lagrange|halfangle needs --family full");
    }
    let line = match a.method {
        SumMethod::Lagrange => sum_json(
            lagrange_sum(phi, a.m)?,
            Method::ClosedForm,
            singular_proximity(&spec, FullForm::Lagrange),
        ),
        SumMethod::Halfangle => sum_json(
            halfangle_free_sum(phi, a.m)?,
            Method::ClosedForm,
            singular_proximity(&spec, FullForm::HalfAngleFree),
        ),
        SumMethod::Naive => sum_json(
            naive_trig_sum(&spec),
            Method::Naive,
            singular_proximity(&spec, FullForm::HalfAngleFree),
        ),
        SumMethod::Auto => {
            let threshold = resolve_threshold(a.threshold, env_threshold)?;
            let v = sum_auto(&spec, threshold);
            sum_json(v.value, v.method, v.singular_proximity)
        }
    };
    Ok(format!("{line}\n").into_bytes())
}

fn cmd_verify(a: &VerifyArgs) -> Result<Vec<u8>, Failure> {
    let pair: Pair = match a.pair.parse() {
        Ok(p) => p,
        Err(_) => {
            let names: Vec<_> = Pair::ALL.iter().map(|p| p.name()).collect();
            return usage(format!(
                "unknown --pair '{}'; expected one of {}",
                a.pair,
                names.join(", ")
            ));
        }
    };
    let counts = parse_counts(&a.counts).or_else(|e| usage(format!("--counts: {e}")))?;
    let grid = GridSpec::new(a.angle_min, a.angle_max, a.steps, counts).guard(a.guard);
    if let Err(e) = grid.validate() {
        return usage(e.to_string());
    }
    let opts = SweepOptions {
        keep_rows: Some(a.rows),
        ..SweepOptions::default()
    };
    let report = residual_sweep_with(&grid, pair, &opts)?;
    Ok(if a.rows {
        report.to_csv()
    } else {
        format!("{}\n", report.to_json())
    }
    .into_bytes())
}

fn cmd_orbit(a: &OrbitArgs, out: Option<&Path>) -> Result<Vec<u8>, Failure> {
    let ext = out.and_then(Format::from_extension);
    let format = match (a.format, ext) {
        (Some(f), Some(e)) if f != e => {
            return usage("--format does not match the extension of --out")
        }
        (Some(f), _) | (None, Some(f)) => f,
        (None, None) => return usage("orbit needs --format csv|json|svg"),
    };
    if a.n < 1 {
        return usage("--n must be at least 1");
    }
    let curve = match orbit_samples(a.n, a.alpha_min, a.alpha_max, a.steps) {
        Ok(c) => c,
        Err(Error::BadRange(msg)) => return usage(msg),
        Err(e) => return Err(e.into()),
    };
    let mut bytes = curve.emit(match format {
        Format::Csv => OrbitFormat::Csv,
        Format::Json => OrbitFormat::Json,
        Format::Svg => OrbitFormat::Svg,
    });
    if format == Format::Json {
        bytes.push(b'\n');
    }
    Ok(bytes)
}

fn cmd_bench(a: &BenchArgs) -> Result<Vec<u8>, Failure> {
    if a.m < 1 || a.repeats < 1 {
        return usage("--m and --repeats must be at least 1");
    }
    let report = run_bench(a.m, a.repeats)?;
    Ok(format!("{}\n", report.to_json()).into_bytes())
}

/// Write through a temporary file in the target directory and rename on success.
fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Run one invocation. `env_threshold` is the value of `TRIGSUM_THRESHOLD`, if set.
pub fn run_with<I, T>(
    argv: I,
    env_threshold: Option<String>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };

    let out = cli.out.as_deref();
    let result = match &cli.command {
        Command::Construct(a) => cmd_construct(a, out),
        Command::Sum(a) => cmd_sum(a, env_threshold),
        Command::Verify(a) => cmd_verify(a),
        Command::Orbit(a) => cmd_orbit(a, out),
        Command::Bench(a) => cmd_bench(a),
    }
    .and_then(|bytes| {
        match out {
            Some(path) => write_atomic(path, &bytes)?,
            None => stdout.write_all(&bytes)?,
        }
        Ok(())
    });

    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(
                stderr,
                "error: {msg}\n\nFor more information, try '--help'."
            );
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

/// Run against the process environment and standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(THRESHOLD_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, env, &mut stdout.lock(), &mut stderr.lock())
}
