//! Command-line front end: `bound`, `sweep`, `verify`, `thresholds`,
//! `series`. All command logic lives here in the library; the binary is a
//! one-line dispatcher.
//!
//! Exit codes (stable contract): 0 success, 1 verification failure,
//! 2 domain error, 3 I/O error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use thiserror::Error;

use crate::bounds::{self, hankel_bound, BoundResult};
use crate::chebyshev::h_series;
use crate::grid::linspace;
use crate::oracles::scan_sign_changes;
use crate::params::{ClassParams, ParamError};
use crate::series::{class_lhs, TruncatedSeries};
use crate::suites;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// 17-significant-digit rendering; round-trips every f64 and is
/// locale-independent, so output files are byte-stable.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] ParamError),
    #[error("invalid {flag}: {reason}")]
    Flag { flag: &'static str, reason: String },
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Flag { .. } => EXIT_DOMAIN,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Cheb,
    Series,
    Surface,
    Profile,
    Montecarlo,
    Thresholds,
}

/// A `t`-sweep request: uniform grid of `steps` points on
/// `[t_min, t_max]`, written as CSV.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub lambda: f64,
    pub mu: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub steps: usize,
    pub output_path: PathBuf,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
}

#[derive(Parser)]
#[command(
    name = "hankelcert",
    version,
    about = "Second Hankel determinant bounds for Chebyshev-subordinate bi-univalent classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the bound and its case analysis for one parameter triple.
    Bound {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Sweep t over a uniform grid and write a CSV table.
    Sweep {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites and report pass/fail per invariant.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Locate every sign change of M1 and M2 in t for a fixed (lambda, mu).
    Thresholds {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        mu: f64,
    },
    /// Print the class expression's expansion next to the H(z,t) series.
    Series {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 0.0)]
        a2: f64,
        #[arg(long, default_value_t = 0.0)]
        a3: f64,
        #[arg(long, default_value_t = 0.0)]
        a4: f64,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

/// Parse `std::env::args`, dispatch, and return the process exit code.
pub fn run() -> i32 {
    // clap reports usage problems on stderr and exits with code 2 itself,
    // which coincides with the domain-error slot of the contract.
    let cli = Cli::parse();
    match cli.command {
        Command::Bound {
            lambda,
            mu,
            t,
            format,
        } => print_or_fail(cmd_bound(lambda, mu, t, format)),
        Command::Sweep {
            lambda,
            mu,
            t_min,
            t_max,
            steps,
            out,
        } => {
            let spec = SweepSpec {
                lambda,
                mu,
                t_min,
                t_max,
                steps,
                output_path: out,
            };
            match cmd_sweep(&spec) {
                Ok(()) => EXIT_OK,
                Err(e) => fail(e),
            }
        }
        Command::Verify {
            suite,
            samples,
            seed,
            tol,
        } => {
            let config = VerifyConfig {
                suite,
                samples,
                seed,
                tolerance: tol,
            };
            match cmd_verify(&config) {
                Ok((report, code)) => {
                    print!("{report}");
                    code
                }
                Err(e) => fail(e),
            }
        }
        Command::Thresholds { lambda, mu } => print_or_fail(cmd_thresholds(lambda, mu)),
        Command::Series {
            lambda,
            mu,
            t,
            a2,
            a3,
            a4,
            order,
        } => print_or_fail(cmd_series(lambda, mu, t, a2, a3, a4, order)),
    }
}

fn print_or_fail(result: Result<String, CliError>) -> i32 {
    match result {
        Ok(report) => {
            print!("{report}");
            EXIT_OK
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> i32 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn opt_f64(v: Option<f64>, absent: &str) -> String {
    v.map(fmt_f64).unwrap_or_else(|| absent.to_string())
}

/// Render one bound computation; text or single-line JSON.
pub fn cmd_bound(lambda: f64, mu: f64, t: f64, format: OutputFormat) -> Result<String, CliError> {
    let params = ClassParams::new(lambda, mu, t)?;
    let r = hankel_bound(&params);
    Ok(match format {
        OutputFormat::Text => render_bound_text(&params, &r),
        OutputFormat::Json => render_bound_json(&params, &r),
    })
}

fn render_bound_text(p: &ClassParams, r: &BoundResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lambda   {}", fmt_f64(p.lambda()));
    let _ = writeln!(s, "mu       {}", fmt_f64(p.mu()));
    let _ = writeln!(s, "t        {}", fmt_f64(p.t()));
    let _ = writeln!(s, "case     {}", r.case);
    let _ = writeln!(s, "m1       {}", fmt_f64(r.m1));
    let _ = writeln!(s, "m2       {}", fmt_f64(r.m2));
    let _ = writeln!(s, "bound    {}", fmt_f64(r.bound));
    let _ = writeln!(s, "k_at_2   {}", fmt_f64(r.k_at_2));
    let _ = writeln!(s, "c0       {}", opt_f64(r.c0, "-"));
    let _ = writeln!(s, "k_at_c0  {}", opt_f64(r.k_at_c0, "-"));
    s
}

fn render_bound_json(p: &ClassParams, r: &BoundResult) -> String {
    format!(
        concat!(
            "{{\"lambda\":{},\"mu\":{},\"t\":{},\"m1\":{},\"m2\":{},",
            "\"case\":\"{}\",\"bound\":{},\"k_at_2\":{},\"c0\":{},\"k_at_c0\":{}}}\n"
        ),
        fmt_f64(p.lambda()),
        fmt_f64(p.mu()),
        fmt_f64(p.t()),
        fmt_f64(r.m1),
        fmt_f64(r.m2),
        r.case,
        fmt_f64(r.bound),
        fmt_f64(r.k_at_2),
        opt_f64(r.c0, "null"),
        opt_f64(r.k_at_c0, "null"),
    )
}

/// CSV content for a sweep; header `t,m1,m2,case,bound,k_at_2,c0`, one row
/// per grid point, absent `c0` as an empty field, LF line endings.
pub fn render_sweep(spec: &SweepSpec) -> Result<String, CliError> {
    if spec.steps < 2 {
        return Err(CliError::Flag {
            flag: "--steps",
            reason: format!("need at least 2 grid points, got {}", spec.steps),
        });
    }
    ClassParams::new(spec.lambda, spec.mu, spec.t_min)?;
    ClassParams::new(spec.lambda, spec.mu, spec.t_max)?;
    if spec.t_min >= spec.t_max {
        return Err(CliError::Flag {
            flag: "--t-min/--t-max",
            reason: format!("t_min {} must be below t_max {}", spec.t_min, spec.t_max),
        });
    }
    let mut out = String::from("t,m1,m2,case,bound,k_at_2,c0\n");
    for t in linspace(spec.t_min, spec.t_max, spec.steps) {
        let params = ClassParams::new(spec.lambda, spec.mu, t)?;
        let r = hankel_bound(&params);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_f64(t),
            fmt_f64(r.m1),
            fmt_f64(r.m2),
            r.case,
            fmt_f64(r.bound),
            fmt_f64(r.k_at_2),
            opt_f64(r.c0, ""),
        );
    }
    Ok(out)
}

pub fn cmd_sweep(spec: &SweepSpec) -> Result<(), CliError> {
    let content = render_sweep(spec)?;
    std::fs::write(&spec.output_path, content).map_err(|source| CliError::Io {
        path: spec.output_path.display().to_string(),
        source,
    })
}

/// Run the selected suites; returns the textual report and the exit code
/// (0 iff every check passed).
pub fn cmd_verify(config: &VerifyConfig) -> Result<(String, i32), CliError> {
    if config.samples == 0 {
        return Err(CliError::Flag {
            flag: "--samples",
            reason: "need at least one sample".into(),
        });
    }
    if config.tolerance.is_nan() || config.tolerance <= 0.0 {
        return Err(CliError::Flag {
            flag: "--tol",
            reason: format!("tolerance must be positive, got {}", config.tolerance),
        });
    }
    let mut checks = Vec::new();
    let want = |s: Suite| config.suite == Suite::All || config.suite == s;
    if want(Suite::Cheb) {
        checks.extend(suites::suite_cheb());
    }
    if want(Suite::Series) {
        checks.extend(suites::suite_series(config.seed));
    }
    if want(Suite::Surface) {
        checks.extend(suites::suite_surface());
    }
    if want(Suite::Profile) {
        checks.extend(suites::suite_profile());
    }
    if want(Suite::Montecarlo) {
        checks.extend(suites::suite_montecarlo(
            config.samples,
            config.seed,
            config.tolerance,
        ));
    }
    if want(Suite::Thresholds) {
        checks.extend(suites::suite_thresholds());
    }

    let mut report = String::new();
    let mut failed = 0usize;
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        let _ = write!(
            report,
            "[{status}] {:42} worst {:>10.3e}  tol {:>8.1e}",
            c.name, c.worst, c.tol
        );
        if !c.pass || !c.detail.is_empty() {
            let _ = write!(report, "  ({})", c.detail);
        }
        report.push('\n');
        if !c.pass {
            failed += 1;
        }
    }
    let _ = writeln!(report, "verify: {} checks, {} failed", checks.len(), failed);
    Ok((
        report,
        if failed == 0 {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    ))
}

/// Scan `(0.501, 0.999)` for sign changes of M1 and M2 and bisect each
/// bracket to 1e-12. An empty list is a legitimate outcome.
pub fn cmd_thresholds(lambda: f64, mu: f64) -> Result<String, CliError> {
    // validate lambda/mu through an arbitrary interior t
    ClassParams::new(lambda, mu, 0.75)?;
    let mut out = String::new();
    for (name, f) in [
        (
            "m1",
            Box::new(move |t: f64| bounds::m1(&ClassParams::new(lambda, mu, t).unwrap()))
                as Box<dyn Fn(f64) -> f64>,
        ),
        (
            "m2",
            Box::new(move |t: f64| bounds::m2(&ClassParams::new(lambda, mu, t).unwrap())),
        ),
    ] {
        let roots = scan_sign_changes(&f, 0.501, 0.999, 498, 1e-12);
        if roots.is_empty() {
            let _ = writeln!(out, "{name}: no roots in (0.501, 0.999)");
        } else {
            for (i, r) in roots.iter().enumerate() {
                let _ = writeln!(out, "{name} root {}: {}", i + 1, fmt_f64(*r));
            }
        }
    }
    Ok(out)
}

/// Side-by-side view of the class expression's expansion for
/// `f = z + a2 z^2 + a3 z^3 + a4 z^4` and the generating-function series.
pub fn cmd_series(
    lambda: f64,
    mu: f64,
    t: f64,
    a2: f64,
    a3: f64,
    a4: f64,
    order: usize,
) -> Result<String, CliError> {
    if order > 4 {
        return Err(CliError::Flag {
            flag: "--order",
            reason: format!("order must be at most 4, got {order}"),
        });
    }
    let params = ClassParams::new(lambda, mu, t)?;
    let mut coeffs = vec![Complex64::ZERO; order + 2];
    coeffs[1] = Complex64::ONE;
    for (k, v) in [(2usize, a2), (3, a3), (4, a4)] {
        if k < coeffs.len() {
            coeffs[k] = Complex64::new(v, 0.0);
        }
    }
    let f = TruncatedSeries::new(coeffs);
    let lhs = class_lhs(&f, &params).expect("f is normalized by construction");
    let h = h_series(t, order).expect("t is inside (-1, 1)");
    let mut out = format!("{:<3} {:<25} {}\n", "k", "lhs", "h");
    for k in 0..=order {
        let _ = writeln!(
            out,
            "{k:<3} {:<25} {}",
            fmt_f64(lhs.coeff(k).re),
            fmt_f64(h.coeff(k).re)
        );
    }
    Ok(out)
}
