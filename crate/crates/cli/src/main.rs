//! `zetaquad` command-line front end.
//!
//! Exit status: 0 on success, 1 when `validate` finds a residual above
//! `10^-(digits/2)`, 2 on malformed flags or unusable files, 3 when the
//! numerics report an error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zetaquad::harness::{self, SweepSpec, DEFAULT_STRIP_POINTS};
use zetaquad::oracle::{convergence_rate, zeta_oracle, zeta_oracle_deriv};
use zetaquad::quadgen::{self, generate_rule, h_p, mordell_h, node, parse_rule, serialize_rule, validate_rule};
use zetaquad::zeta::{zeta_p, zeta_p_deriv};
use zetaquad::{CValue, Complex, MpFloat, PrecisionContext, QuadratureRule, Real, ZetaError};

#[derive(Parser, Debug)]
#[command(name = "zetaquad", version, about = "High-precision zeta(s) in vertical strips")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate the coefficients of a rule of order p.
    Gen(GenArgs),
    /// Check a coefficient file against the Mordell integral.
    Validate(ValidateArgs),
    /// Evaluate zeta_p(s) or its derivative.
    Eval(EvalArgs),
    /// Sweep the strip error max |zeta_p - zeta| over a t range.
    Sweep(SweepArgs),
    /// Fit the convergence rate of the trapezoidal oracle in 1/h.
    Rate(RateArgs),
    /// Errors at the B(t) nodes and midpoints of one interval [t_n, t_{n+1}).
    Dips(DipsArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    p: usize,
    #[arg(long, default_value_t = 60)]
    digits: u32,
    /// Output file; the coefficients go to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    coeffs: PathBuf,
    /// Working digits; defaults to the file's `digits`.
    #[arg(long)]
    digits: Option<u32>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Coefficient file; without it a rule of order `--p` is generated.
    #[arg(long)]
    coeffs: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    p: usize,
    /// Point as `RE,IM`, read at full precision.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long)]
    deriv: bool,
    #[arg(long, default_value_t = 40)]
    digits: u32,
    /// Evaluate in hardware double precision.
    #[arg(long)]
    double: bool,
    /// Evaluate the trapezoidal reference instead of zeta_p.
    #[arg(long, conflicts_with_all = ["coeffs", "double"])]
    oracle: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    coeffs: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long = "t-lo")]
    t_lo: f64,
    #[arg(long = "t-hi")]
    t_hi: f64,
    #[arg(long)]
    samples: usize,
    #[arg(long)]
    out: PathBuf,
    #[arg(long = "strip-points", default_value_t = DEFAULT_STRIP_POINTS)]
    strip_points: usize,
    /// Measurement digits; defaults to the file's `digits`.
    #[arg(long)]
    digits: Option<u32>,
    /// Sweep the derivative instead of the value.
    #[arg(long)]
    deriv: bool,
    /// Evaluate zeta_p in hardware double precision.
    #[arg(long)]
    double: bool,
}

#[derive(Args, Debug)]
struct RateArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// Strictly decreasing step sizes, comma separated.
    #[arg(long = "h-list")]
    h_list: String,
    #[arg(long, default_value_t = 40)]
    digits: u32,
}

#[derive(Args, Debug)]
struct DipsArgs {
    #[arg(long)]
    coeffs: PathBuf,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    out: PathBuf,
    /// Measurement digits; defaults to the file's `digits`.
    #[arg(long)]
    digits: Option<u32>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numeric(ZetaError),
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        CliError::Numeric(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn io_err(path: &Path, e: io::Error) -> CliError {
    usage(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Validate(a) => validate(a),
        Command::Eval(a) => eval(a),
        Command::Sweep(a) => sweep(a),
        Command::Rate(a) => rate(a),
        Command::Dips(a) => dips(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Numeric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn out_line(line: String) -> CliResult<()> {
    writeln!(io::stdout().lock(), "{line}").map_err(|e| usage(format!("stdout: {e}")))
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

/// Digits recorded in a coefficient file.
fn file_digits(text: &str) -> CliResult<u32> {
    let probe: QuadratureRule<MpFloat> = parse_rule(text, &PrecisionContext::new(16))?;
    Ok(probe.gen_digits)
}

fn load_rule(path: &Path, digits: Option<u32>) -> CliResult<(QuadratureRule<MpFloat>, PrecisionContext)> {
    let text = read_text(path)?;
    let digits = match digits {
        Some(d) => d,
        None => file_digits(&text)?,
    };
    let ctx = context(digits)?;
    Ok((parse_rule(&text, &ctx)?, ctx))
}

fn context(digits: u32) -> CliResult<PrecisionContext> {
    if digits == 0 {
        return Err(usage("--digits must be positive"));
    }
    Ok(PrecisionContext::new(digits))
}

/// Parses `RE,IM` at the precision of `ctx`; `Im s` must be positive.
fn parse_point(text: &str, ctx: &PrecisionContext) -> CliResult<CValue> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| usage(format!("--s expects RE,IM, got `{text}`")))?;
    let s: CValue = Complex::parse(re.trim(), im.trim(), ctx)
        .ok_or_else(|| usage(format!("--s: malformed number in `{text}`")))?;
    if s.im.is_negative() || s.im.is_zero() {
        return Err(usage(format!("--s: Im s must be positive, got `{}`", im.trim())));
    }
    Ok(s)
}

fn fmt_complex<T: Real>(z: &Complex<T>, digits: usize) -> String {
    let (re, im) = z.to_sci_pair(digits);
    format!("{re} {im}")
}

fn gen(a: GenArgs) -> CliResult<u8> {
    if a.p == 0 || a.p > quadgen::MAX_P {
        return Err(usage(format!("--p must lie in 1..={}", quadgen::MAX_P)));
    }
    context(a.digits)?;
    let rule = generate_rule(a.p, a.digits)?;
    let text = serialize_rule(&rule);
    let residual = rule.residual.as_ref().map_or_else(|| "n/a".into(), |r| r.to_sci_string(6));
    match &a.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| io_err(path, e))?;
            out_line(format!("residual {residual}"))?;
        }
        None => {
            print!("{text}");
            eprintln!("residual {residual}");
        }
    }
    Ok(0)
}

fn validate(a: ValidateArgs) -> CliResult<u8> {
    let (mut rule, ctx) = load_rule(&a.coeffs, a.digits)?;
    let residual = validate_rule(&mut rule, &ctx);
    // H_p is even and the moment nodes are mirrored, so both defects should
    // sit at rounding level.
    let p = rule.p;
    let mut even = MpFloat::from_i64(0, &ctx);
    let mut mirror = MpFloat::from_i64(0, &ctx);
    for k in 0..(4 * p + 2) {
        let y: MpFloat = node(k, p, &ctx);
        let ym: MpFloat = node(4 * p + 1 - k, p, &ctx);
        even = even.max_of((h_p(&y, &rule, &ctx) - &h_p(&(-y.clone()), &rule, &ctx)).abs());
        mirror = mirror.max_of((mordell_h(&y, &ctx) - &mordell_h(&ym, &ctx)).abs());
    }
    let limit = MpFloat::pow10(-(ctx.digits() as i32) / 2, &ctx);
    let pass = residual <= limit;
    out_line(format!("p {p}"))?;
    out_line(format!("digits {}", ctx.digits()))?;
    out_line(format!("residual {}", residual.to_sci_string(6)))?;
    out_line(format!("evenness {}", even.to_sci_string(6)))?;
    out_line(format!("moment-mirror {}", mirror.to_sci_string(6)))?;
    out_line(format!("status {}", if pass { "ok" } else { "FAIL" }))?;
    Ok(if pass { 0 } else { 1 })
}

fn eval(a: EvalArgs) -> CliResult<u8> {
    let ctx = context(a.digits)?;
    let s = parse_point(&a.s, &ctx)?;
    let digits = a.digits as usize;
    if a.oracle {
        let v = if a.deriv { zeta_oracle_deriv(&s, &ctx)? } else { zeta_oracle(&s, &ctx)? };
        out_line(fmt_complex(&v, digits))?;
        return Ok(0);
    }
    let rule = match &a.coeffs {
        Some(path) => parse_rule(&read_text(path)?, &ctx)?,
        None => {
            if a.p == 0 || a.p > quadgen::MAX_P {
                return Err(usage(format!("--p must lie in 1..={}", quadgen::MAX_P)));
            }
            generate_rule(a.p, a.digits)?
        }
    };
    if a.double {
        let rule64: QuadratureRule<f64> = rule.cast(&ctx);
        let s64 = Complex::<f64>::from_mp(&s, &ctx);
        let r = if a.deriv { zeta_p_deriv(&s64, &rule64, &ctx)? } else { zeta_p(&s64, &rule64, &ctx)? };
        out_line(fmt_complex(&r.value, 17))?;
    } else {
        let r = if a.deriv { zeta_p_deriv(&s, &rule, &ctx)? } else { zeta_p(&s, &rule, &ctx)? };
        out_line(fmt_complex(&r.value, digits))?;
    }
    Ok(0)
}

fn write_file(path: &Path, f: impl FnOnce(&mut fs::File) -> io::Result<()>) -> CliResult<()> {
    let mut file = fs::File::create(path).map_err(|e| io_err(path, e))?;
    f(&mut file).map_err(|e| io_err(path, e))
}

fn sweep(a: SweepArgs) -> CliResult<u8> {
    let (rule, ctx) = load_rule(&a.coeffs, if a.double { Some(16) } else { a.digits })?;
    let mut spec = SweepSpec::new(rule.p, a.a, a.b, a.t_lo, a.t_hi, a.samples, ctx.digits());
    spec.strip_points = a.strip_points;
    spec.validate().map_err(|e| usage(e.to_string()))?;
    let report = match (a.double, a.deriv) {
        (false, false) => harness::sweep(&spec, &rule)?,
        (false, true) => harness::deriv_sweep(&spec, &rule)?,
        (true, false) => harness::sweep(&spec, &rule.cast::<f64>(&ctx))?,
        (true, true) => harness::deriv_sweep(&spec, &rule.cast::<f64>(&ctx))?,
    };
    write_file(&a.out, |f| harness::write_sweep_csv(&report, f))?;
    out_line(format!("rows {}", report.rows.len()))?;
    out_line(format!("max_delta {}", report.max_delta.to_sci_string(6)))?;
    Ok(0)
}

fn rate(a: RateArgs) -> CliResult<u8> {
    let ctx = context(a.digits)?;
    let s = parse_point(&a.s, &ctx)?;
    let hs = a
        .h_list
        .split(',')
        .map(|h| {
            MpFloat::parse_decimal(h.trim(), &ctx).ok_or_else(|| usage(format!("--h-list: malformed step `{h}`")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let slope = convergence_rate(&s, &hs, &ctx)?;
    out_line(format!("slope {slope:.6}"))?;
    out_line(format!("expected {:.6}", -std::f64::consts::PI / std::f64::consts::SQRT_2))?;
    Ok(0)
}

fn dips(a: DipsArgs) -> CliResult<u8> {
    if a.n == 0 {
        return Err(usage("--n must be positive"));
    }
    let (rule, ctx) = load_rule(&a.coeffs, a.digits)?;
    let points = harness::dip_diagnostic(a.n, &rule, &ctx)?;
    write_file(&a.out, |f| harness::write_dips_csv(&points, ctx.digits(), f))?;
    let worst = |node: bool| {
        points
            .iter()
            .filter(|d| d.node == node)
            .fold(MpFloat::from_i64(0, &ctx), |m, d| m.max_of(d.error.clone()))
    };
    out_line(format!("max_node_error {}", worst(true).to_sci_string(6)))?;
    out_line(format!("max_mid_error {}", worst(false).to_sci_string(6)))?;
    Ok(0)
}
