//! Command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! status with the rendered output; `main` only forwards them. Exit codes:
//! 0 success, 1 verification or convergence failure, 2 usage or domain
//! error.

use std::ffi::OsString;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::elem::{ccos, cexp};
use crate::error::{Error, Result};
use crate::exec::{with_threads, Exec};
use crate::gamma::{cgamma, EvalResult};
use crate::report::{raster_csv, zeros_csv, ErrorReport, EvalReport, Stamped};
use crate::rootscan::{
    bracket, curves, extract_curves_with, find_zeros_with, scan, scan_strip_with, CurveOptions,
    FnId, Rect, Region, ScanOptions,
};
use crate::verify::{self, run_suite, Suite, SuiteConfig};
use crate::xi::xi_eval;
use crate::zeta::{zeta_direct, zeta_eta, zeta_strip};
use crate::Complex;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// `lo:hi` range flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected lo:hi, got '{s}'"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("'{v}' is not a finite number"))
        };
        Ok(Range {
            lo: parse(lo)?,
            hi: parse(hi)?,
        })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

fn finite(s: &str) -> std::result::Result<f64, String> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| format!("'{s}' is not a finite number"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaMethod {
    /// Continuation to the whole supported region.
    Strip,
    /// Alternating series, re z > 0.
    Eta,
    /// Dirichlet series, re z >= 1.1.
    Direct,
}

#[derive(Debug, Parser)]
#[command(
    name = "critline",
    version,
    about = "Zeta, gamma and xi evaluation and zero location"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for grid work [default: available parallelism].
    #[arg(long, global = true, env = "CRITLINE_THREADS")]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Wrap JSON reports with the generation time.
    #[arg(long, global = true)]
    pub timestamps: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate exp, cos, gamma, zeta or xi at one point.
    Eval(EvalArgs),
    /// Run a residual suite for a functional identity.
    Verify(VerifyArgs),
    /// Locate zeros of ξ(1/2 + it) by sign changes and bisection.
    Zeros(ZerosArgs),
    /// Scan |ξ| over a rectangle of the critical strip.
    Scan(ScanArgs),
    /// Trace the v = 0, w = 0 and v = w curves of a function.
    Curves(CurvesArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub re: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = finite, default_value_t = 0.0)]
    pub im: f64,
    /// Zeta representation.
    #[arg(long, value_enum, default_value_t = ZetaMethod::Strip)]
    pub method: ZetaMethod,
    /// Tail tolerance for the Dirichlet series.
    #[arg(long, value_parser = finite, default_value_t = 1e-13)]
    pub tol_tail: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// functional-eq, reflection, line-real or symmetry.
    #[arg(long)]
    pub suite: String,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_parser = finite, default_value_t = verify::DEFAULT_T_MAX)]
    pub t_max: f64,
    /// Pass threshold for the maximum residual [default: per suite].
    #[arg(long, value_parser = finite)]
    pub tol_residual: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = finite, conflicts_with = "t")]
    pub t_lo: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = finite, conflicts_with = "t")]
    pub t_hi: Option<f64>,
    /// Interval as lo:hi [default: 0:30].
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<Range>,
    #[arg(long, value_parser = finite, default_value_t = 0.25)]
    pub step: f64,
    #[arg(long, value_parser = finite, default_value_t = bracket::RESID_TOL)]
    pub tol_resid: f64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "0.05:0.95")]
    pub re: Range,
    #[arg(long, allow_hyphen_values = true, default_value = "0:30")]
    pub t: Range,
    #[arg(long, value_parser = finite, default_value_t = 0.05)]
    pub step: f64,
    #[arg(long, value_parser = finite, default_value_t = scan::DEFAULT_OFFLINE_MARGIN)]
    pub margin: f64,
    #[arg(long, value_parser = finite, default_value_t = scan::CANDIDATE_TOL)]
    pub tol_candidate: f64,
    /// Also write the |ξ| raster as CSV to this path.
    #[arg(long)]
    pub raster: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurvesArgs {
    /// exp, cos, gamma or xi.
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub re: Range,
    #[arg(long, allow_hyphen_values = true)]
    pub im: Range,
    #[arg(long, value_parser = finite, default_value_t = 0.05)]
    pub step: f64,
    #[arg(long, value_parser = finite, default_value_t = curves::CURVE_TOL)]
    pub tol_curve: f64,
}

/// Exit status and rendered streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } | Error::InternalConsistency(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EvalFn {
    Exp,
    Cos,
    Gamma,
    Zeta,
    Xi,
}

impl FromStr for EvalFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exp" => Ok(EvalFn::Exp),
            "cos" => Ok(EvalFn::Cos),
            "gamma" => Ok(EvalFn::Gamma),
            "zeta" => Ok(EvalFn::Zeta),
            "xi" => Ok(EvalFn::Xi),
            _ => Err(Error::UnknownFunction(s.to_string())),
        }
    }
}

impl EvalFn {
    fn name(self) -> &'static str {
        match self {
            EvalFn::Exp => "exp",
            EvalFn::Cos => "cos",
            EvalFn::Gamma => "gamma",
            EvalFn::Zeta => "zeta",
            EvalFn::Xi => "xi",
        }
    }
}

/// Rendered report body and its exit status.
struct Body {
    text: String,
    code: i32,
}

fn render_json<T: Serialize>(cli: &Cli, report: &T) -> Result<String> {
    let text = if cli.timestamps {
        let unix_time = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs_f64())
            .unwrap_or(0.0);
        serde_json::to_string_pretty(&Stamped { unix_time, report })
    } else {
        serde_json::to_string_pretty(report)
    };
    text.map(|t| t + "\n")
        .map_err(|e| Error::InternalConsistency(format!("serialization failed: {e}")))
}

fn json_only(cli: &Cli, what: &str) -> Result<()> {
    match cli.format {
        Format::Json => Ok(()),
        Format::Csv => Err(Error::Precondition(format!(
            "CSV output is available for zeros and scan, not {what}"
        ))),
    }
}

fn elementary(v: Complex) -> EvalResult {
    EvalResult::new(v, 4.0 * f64::EPSILON * v.abs(), 1)
}

fn cmd_eval(cli: &Cli, args: &EvalArgs) -> Result<Body> {
    json_only(cli, "eval")?;
    let function: EvalFn = args.function.parse()?;
    let z = Complex::new(args.re, args.im);
    let result = match function {
        EvalFn::Exp => elementary(cexp(z)?),
        EvalFn::Cos => elementary(ccos(z)?),
        EvalFn::Gamma => cgamma(z)?,
        EvalFn::Zeta => match args.method {
            ZetaMethod::Strip => zeta_strip(z)?,
            ZetaMethod::Eta => zeta_eta(z)?,
            ZetaMethod::Direct => zeta_direct(z, args.tol_tail)?,
        },
        EvalFn::Xi => xi_eval(z)?,
    };
    let report = EvalReport {
        function: function.name().to_string(),
        z,
        value: result.value,
        abs_error_estimate: result.abs_error_estimate,
        terms_used: result.terms_used,
    };
    Ok(Body {
        text: render_json(cli, &report)?,
        code: EXIT_OK,
    })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<Body> {
    json_only(cli, "verify")?;
    let suite: Suite = args.suite.parse()?;
    let cfg = SuiteConfig {
        samples: args.samples,
        seed: args.seed,
        t_max: args.t_max,
        tol: args.tol_residual,
        exec: Exec::default(),
    };
    let report = run_suite(suite, &cfg)?;
    Ok(Body {
        text: render_json(cli, &report)?,
        code: if report.pass { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn cmd_zeros(cli: &Cli, args: &ZerosArgs) -> Result<Body> {
    let (t_lo, t_hi) = match args.t {
        Some(r) => (r.lo, r.hi),
        None => (args.t_lo.unwrap_or(0.0), args.t_hi.unwrap_or(30.0)),
    };
    let records = find_zeros_with(Exec::default(), t_lo, t_hi, args.step, args.tol_resid)?;
    let text = match cli.format {
        Format::Json => render_json(cli, &records)?,
        Format::Csv => zeros_csv(&records),
    };
    Ok(Body {
        text,
        code: EXIT_OK,
    })
}

fn cmd_scan(cli: &Cli, args: &ScanArgs) -> Result<Body> {
    let region = Region::new(args.re.lo, args.re.hi, args.t.lo, args.t.hi);
    let opts = ScanOptions::new(args.step, args.margin).candidate_tol(args.tol_candidate);
    let result = scan_strip_with(region, &opts)?;
    let csv = || raster_csv(&region, args.step, &result.raster);
    if let Some(path) = &args.raster {
        write_file(path, &csv())?;
    }
    let text = match cli.format {
        Format::Json => render_json(cli, &result.report)?,
        Format::Csv => csv(),
    };
    Ok(Body {
        text,
        code: EXIT_OK,
    })
}

fn cmd_curves(cli: &Cli, args: &CurvesArgs) -> Result<Body> {
    json_only(cli, "curves")?;
    let function: FnId = args.function.parse()?;
    let rect = Rect::new(args.re.lo, args.re.hi, args.im.lo, args.im.hi);
    let opts = CurveOptions {
        step: args.step,
        curve_tol: args.tol_curve,
        exec: Exec::default(),
    };
    if !(opts.curve_tol > 0.0) {
        return Err(Error::Precondition(
            "curve tolerance must be positive".into(),
        ));
    }
    let report = extract_curves_with(function, rect, &opts)?;
    Ok(Body {
        text: render_json(cli, &report)?,
        code: EXIT_OK,
    })
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<Body> {
    match &cli.command {
        Command::Eval(a) => cmd_eval(cli, a),
        Command::Verify(a) => cmd_verify(cli, a),
        Command::Zeros(a) => cmd_zeros(cli, a),
        Command::Scan(a) => cmd_scan(cli, a),
        Command::Curves(a) => cmd_curves(cli, a),
    }
}

fn execute(cli: &Cli) -> Result<Body> {
    match cli.threads {
        Some(0) => Err(Error::Precondition("--threads must be at least 1".into())),
        Some(n) => with_threads(n, || dispatch(cli)),
        None => dispatch(cli),
    }
}

/// Parses `args` (program name first) and runs the selected command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };

    let result = catch_unwind(AssertUnwindSafe(|| execute(&cli)))
        .unwrap_or_else(|_| Err(Error::InternalConsistency("evaluation panicked".into())));
    let (body, stderr) = match result {
        Ok(body) => (body, String::new()),
        Err(e) => {
            let report = ErrorReport::from(&e);
            let text = serde_json::to_string_pretty(&report).unwrap_or_default() + "\n";
            let stderr = format!("error: {e}\n");
            (
                Body {
                    text,
                    code: exit_code(&e),
                },
                stderr,
            )
        }
    };

    match &cli.output {
        Some(path) => match write_file(path, &body.text) {
            Ok(()) => Outcome {
                code: body.code,
                stdout: String::new(),
                stderr,
            },
            Err(e) => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("{stderr}error: {e}\n"),
            },
        },
        None => Outcome {
            code: body.code,
            stdout: body.text,
            stderr,
        },
    }
}
