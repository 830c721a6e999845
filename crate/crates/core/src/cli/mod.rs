//! Command-line front end.
//!
//! Exit codes: 0 success, 1 computation error or unexpected audit failure,
//! 2 usage error, 3 I/O error.

mod expr;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::audit::{self, AuditReport, Status};
use crate::distributions::{mgf_series, moments, Distribution};
use crate::error::Error;
use crate::exact::{fmt_rational, parse_rational, Rational};
use crate::families;
use crate::padic::{fermionic, volkenborn};
use crate::qcalc::QPoint;
use crate::series::Series;

pub use expr::parse_integrand;

pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// An inclusive index range, written `a..b` or as a single index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
}

impl IndexRange {
    fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

fn range_arg(s: &str) -> Result<IndexRange, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid index {t:?}"));
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if start > end {
        return Err(format!("empty range {s}"));
    }
    Ok(IndexRange { start, end })
}

#[derive(Parser, Debug)]
#[command(name = "qbern", version, about = "Exact probabilistic q-Bernstein polynomials")]
struct Cli {
    /// Truncation order of every power series.
    #[arg(long, global = true, env = "QBERN_ORDER", default_value_t = 16)]
    order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of B^Y_{r,n}(x, q) over index ranges.
    Table(TableArgs),
    /// One value of a polynomial family.
    Eval(EvalArgs),
    /// Coefficients of the moment generating function, or of the
    /// generating function of B^Y_{r,n} when --r is given.
    Series(SeriesArgs),
    /// Bosonic and fermionic p-adic q-integrals of a Laurent expression.
    Padic(PadicArgs),
    /// Run the identity auditor.
    Audit(AuditArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Law {
    Poisson,
    Bernoulli,
    Binomial,
    Geometric,
    Negbinomial,
    Uniform,
    Constant,
    Custom,
}

#[derive(Args, Debug)]
struct DistArgs {
    #[arg(long, value_enum, default_value = "constant")]
    dist: Law,
    /// Poisson rate.
    #[arg(long, value_parser = rational_arg)]
    alpha: Option<Rational>,
    /// Success probability.
    #[arg(long, value_parser = rational_arg)]
    p1: Option<Rational>,
    /// Binomial trial count.
    #[arg(long)]
    nbar: Option<u32>,
    /// Negative binomial shape.
    #[arg(long)]
    a: Option<u32>,
    /// Value of a constant Y.
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    y_value: Rational,
    /// Moments E[Y^0], E[Y^1], ... of a custom law, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = rational_arg)]
    moments: Vec<Rational>,
}

impl DistArgs {
    fn build(&self) -> Result<Distribution, Failure> {
        let need = |v: &Option<Rational>, flag: &str| {
            v.clone().ok_or_else(|| Failure::Usage(format!("--dist {} requires --{flag}", self.name())))
        };
        let need_count = |v: Option<u32>, flag: &str| {
            v.ok_or_else(|| Failure::Usage(format!("--dist {} requires --{flag}", self.name())))
        };
        let d = match self.dist {
            Law::Poisson => Distribution::Poisson { alpha: need(&self.alpha, "alpha")? },
            Law::Bernoulli => Distribution::Bernoulli { p1: need(&self.p1, "p1")? },
            Law::Binomial => Distribution::Binomial { trials: need_count(self.nbar, "nbar")?, p1: need(&self.p1, "p1")? },
            Law::Geometric => Distribution::Geometric { p1: need(&self.p1, "p1")? },
            Law::Negbinomial => Distribution::NegBinomial { a: need_count(self.a, "a")?, p1: need(&self.p1, "p1")? },
            Law::Uniform => Distribution::Uniform01,
            Law::Constant => Distribution::Constant { c: self.y_value.clone() },
            Law::Custom => Distribution::CustomMoments { moments: self.moments.clone() },
        };
        d.validate().map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(d)
    }

    fn name(&self) -> String {
        self.dist.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Args, Debug)]
struct PointArgs {
    /// Base of the point: q = rho^d, t = q^x = rho^c.
    #[arg(long, value_parser = rational_arg, requires_all = ["c", "d"], conflicts_with = "x")]
    rho: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    #[arg(long)]
    d: Option<u32>,
    /// Classical point q = 1.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    x: Option<Rational>,
}

impl PointArgs {
    fn build(&self) -> Result<QPoint, Failure> {
        match (&self.rho, self.c, self.d, &self.x) {
            (Some(rho), Some(c), Some(d), None) => {
                QPoint::new(rho.clone(), c, d).map_err(|e| Failure::Usage(e.to_string()))
            }
            (None, None, None, Some(x)) => Ok(QPoint::classical(x.clone())),
            _ => Err(Failure::Usage("give either --rho, --c and --d, or --x".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Csv,
    Jsonl,
    Latex,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    dist: DistArgs,
    #[command(flatten)]
    point: PointArgs,
    /// Degree range, `a..b` inclusive.
    #[arg(long, value_parser = range_arg)]
    n: IndexRange,
    /// Index range, `a..b` inclusive; rows with r > n are omitted.
    #[arg(long, value_parser = range_arg)]
    r: IndexRange,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Qbernstein,
    ProbQbernstein,
    Bernstein,
    Stirling2,
    ProbStirling2,
    Bell,
    HigherBernoulli,
    Euler,
    FrobeniusEuler,
    ProbBernoulli,
    ProbBernoulliHigher,
    ProbEuler,
    Moment,
    Bracket,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[command(flatten)]
    dist: DistArgs,
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, default_value_t = 0)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Second index of Stirling numbers.
    #[arg(long, default_value_t = 0)]
    m: usize,
    /// Order of higher-order families.
    #[arg(long, value_parser = rational_arg, default_value = "1", allow_hyphen_values = true)]
    power: Rational,
    /// Polynomial argument.
    #[arg(long, value_parser = rational_arg, default_value = "0", allow_hyphen_values = true)]
    arg: Rational,
    /// Frobenius-Euler parameter.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    u: Option<Rational>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[command(flatten)]
    dist: DistArgs,
    #[command(flatten)]
    point: PointArgs,
    /// Dump the generating function of B^Y_{r,n} instead of the MGF.
    #[arg(long)]
    r: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct PadicArgs {
    #[arg(long, value_parser = rational_arg)]
    q: Rational,
    /// Integrand, e.g. "3*t^2 - 1/2*t^-1 + [x]^2".
    #[arg(long, allow_hyphen_values = true)]
    expr: String,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Restrict to these case ids.
    #[arg(long = "case")]
    cases: Vec<String>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Computation { context: String, error: Error },
    Io(String),
    /// Already reported; carries the exit code.
    Exit(i32),
}

impl Failure {
    fn computation(context: impl Into<String>) -> impl FnOnce(Error) -> Failure {
        let context = context.into();
        move |error| Failure::Computation { context, error }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Computation { context, error }) => {
            let _ = writeln!(stderr, "error [{context}]: {error}");
            EXIT_COMPUTATION
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
        Err(Failure::Exit(code)) => code,
    }
}

pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let args: Vec<OsString> = args.into_iter().collect();
    run(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let order = cli.order;
    match &cli.command {
        Command::Table(args) => table(args, order, stdout),
        Command::Eval(args) => {
            let value = eval(args, order)?;
            writeln!(stdout, "{}", fmt_rational(&value)).map_err(|e| Failure::Io(e.to_string()))
        }
        Command::Series(args) => series(args, order, stdout),
        Command::Padic(args) => padic(args, stdout),
        Command::Audit(args) => run_audit(args, order, stdout, stderr),
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn jsonl_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        let mut obj = serde_json::Map::new();
        for (key, value) in header.iter().zip(row) {
            obj.insert((*key).to_string(), serde_json::Value::String(value.clone()));
        }
        out.push_str(&serde_json::Value::Object(obj).to_string());
        out.push('\n');
    }
    out
}

fn latex_text(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "r".repeat(columns.len()));
    out.push_str(&columns.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("${c}$")).collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

fn render(format: Format, header: &[&str], latex_header: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv => csv_text(header, rows),
        Format::Jsonl => jsonl_text(header, rows),
        Format::Latex => latex_text(latex_header, rows),
    }
}

fn table(args: &TableArgs, order: usize, stdout: &mut dyn Write) -> Result<(), Failure> {
    let d = args.dist.build()?;
    let p = args.point.build()?;
    let n_max = args.n.end;
    let gf_order = order.max(n_max);
    let mut rows = Vec::new();
    let mut gfs = Vec::new();
    for r in args.r.iter() {
        let gf = families::prob_qbernstein_gf(&d, r, &p, gf_order).map_err(Failure::computation("table"))?;
        gfs.push((r, gf));
    }
    for n in args.n.iter() {
        for (r, gf) in &gfs {
            if *r > n {
                continue;
            }
            let value = gf.egf_coeff(n).map_err(Failure::computation("table"))?;
            rows.push(vec![n.to_string(), r.to_string(), fmt_rational(&value)]);
        }
    }
    let text = render(args.output.format, &["n", "r", "value"], &["$n$", "$r$", "$B^{Y}_{r,n}(x,q)$"], &rows);
    emit(&text, args.output.out.as_ref(), stdout)
}

fn eval(args: &EvalArgs, order: usize) -> Result<Rational, Failure> {
    let (r, n, m) = (args.r, args.n, args.m);
    let label = args.family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let ctx = Failure::computation(format!("eval {label}"));
    let point = || args.point.build();
    let value = match args.family {
        Family::Qbernstein => families::qbernstein(r, n, &point()?),
        Family::ProbQbernstein => families::prob_qbernstein(&args.dist.build()?, r, n, &point()?, order.max(n)),
        Family::Bernstein => families::bernstein_classical(r, n, &point()?.x()),
        Family::Stirling2 => Ok(families::stirling2(n, m)),
        Family::ProbStirling2 => families::prob_stirling2(&args.dist.build()?, n, m),
        Family::Bell => Ok(families::bell_poly(n, &args.arg)),
        Family::HigherBernoulli => Ok(families::higher_bernoulli(n, &args.power, &args.arg)),
        Family::Euler => Ok(families::euler_poly(n, &args.arg)),
        Family::FrobeniusEuler => {
            let u = args.u.clone().ok_or_else(|| Failure::Usage("--family frobenius-euler requires --u".into()))?;
            families::frobenius_euler(n, &args.power, &args.arg, &u)
        }
        Family::ProbBernoulli => families::prob_bernoulli(&args.dist.build()?, n, &args.arg),
        Family::ProbBernoulliHigher => families::prob_bernoulli_higher(&args.dist.build()?, n, r, &args.arg),
        Family::ProbEuler => families::prob_euler(&args.dist.build()?, n, &args.arg),
        Family::Moment => moments(&args.dist.build()?, n).map(|mut v| v.pop().expect("non-empty")),
        Family::Bracket => Ok(point()?.bracket()),
    };
    value.map_err(ctx)
}

fn series(args: &SeriesArgs, order: usize, stdout: &mut dyn Write) -> Result<(), Failure> {
    let d = args.dist.build()?;
    let s: Series<Rational> = match args.r {
        Some(r) => {
            let p = args.point.build()?;
            families::prob_qbernstein_gf(&d, r, &p, order).map_err(Failure::computation("series"))?
        }
        None => mgf_series(&d, order).map_err(Failure::computation("series"))?,
    };
    let mut rows = Vec::new();
    for k in 0..=s.order() {
        let egf = s.egf_coeff(k).map_err(Failure::computation("series"))?;
        rows.push(vec![k.to_string(), fmt_rational(&s.coeff(k)), fmt_rational(&egf)]);
    }
    let text = render(args.output.format, &["k", "coefficient", "egf"], &["$k$", "$[v^k]$", "$k!\\,[v^k]$"], &rows);
    emit(&text, args.output.out.as_ref(), stdout)
}

fn padic(args: &PadicArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let f = parse_integrand(&args.expr, &args.q).map_err(Failure::Usage)?;
    let bosonic = volkenborn(&f, &args.q).map_err(Failure::computation("padic volkenborn"))?;
    let fermi = fermionic(&f, &args.q).map_err(Failure::computation("padic fermionic"))?;
    writeln!(stdout, "volkenborn: {bosonic}\nfermionic: {fermi}").map_err(|e| Failure::Io(e.to_string()))
}

fn run_audit(args: &AuditArgs, order: usize, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    if order == 0 {
        return Err(Failure::Usage("audit needs --order of at least 1".into()));
    }
    let mut cases = audit::registry();
    if !args.cases.is_empty() {
        cases.retain(|c| args.cases.iter().any(|id| id == c.id));
        if cases.is_empty() {
            return Err(Failure::Usage(format!("no registered case matches {:?}", args.cases)));
        }
    }
    let report = audit::run_cases(&cases, args.seed, args.trials as usize, order);
    let text = match args.format {
        Format::Jsonl => audit::render_jsonl(&report),
        Format::Csv => audit::render_csv(&report).map_err(|e| Failure::Io(e.to_string()))?,
        Format::Latex => audit::render_latex(&report),
    };
    emit(&text, args.out.as_ref(), stdout)?;
    summarize(&report, stderr)
}

fn summarize(report: &AuditReport, stderr: &mut dyn Write) -> Result<(), Failure> {
    let _ = writeln!(
        stderr,
        "{} records: {} pass, {} fail, {} skip, {} non-executable",
        report.records.len(),
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Skip),
        report.count(Status::NonExecutable)
    );
    let failures = report.unexpected_failures();
    if failures.is_empty() {
        return Ok(());
    }
    for r in &failures {
        let _ = writeln!(stderr, "unexpected FAIL [{} {}] {} trial {}", r.id, r.variant, r.dist, r.trial);
    }
    Err(Failure::Exit(EXIT_COMPUTATION))
}
