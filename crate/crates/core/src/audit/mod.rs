//! Identity auditor.
//!
//! Each [`IdentityCase`] states an identity between quantities computed by
//! different routes: one side is normally read off the defining generating
//! function, the other is a closed form or an operator evaluation. The
//! runner draws random admissible exact points from fixed grids, evaluates
//! both sides and records exact equality. Nothing is approximate.
//!
//! Cases carry an [`Expectation`]: `Pass` cases are claims the auditor
//! stands behind, `Record` cases are evaluated and reported with whatever
//! status they get.

mod cases;
mod report;

use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::{grid, Distribution};
use crate::error::Result;
use crate::exact::{fmt_rational, int, rat, LogExt, Rational};
use crate::qcalc::QPoint;

pub use cases::registry;
pub use report::{render_csv, render_jsonl, render_latex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Verbatim,
    Corrected,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Verbatim => "verbatim",
            Variant::Corrected => "corrected",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Every trial must pass.
    Pass,
    /// Evaluated and reported; status is not asserted.
    Record,
    /// No well-defined reading exists; reported without evaluation.
    NonExecutable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIP")]
    Skip,
    #[serde(rename = "NON-EXECUTABLE")]
    NonExecutable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::NonExecutable => "NON-EXECUTABLE",
        })
    }
}

/// Which distributions a case is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LawPool {
    /// The six laws plus degenerate ones.
    Any,
    Constant,
    ConstantOne,
    /// The six non-degenerate laws.
    NonConstant,
    Poisson,
    Bernoulli,
    Binomial,
    Geometric,
    /// Negative binomial with `p1 < 1`.
    NegBinomial,
    Uniform,
}

impl LawPool {
    pub fn laws(self) -> Vec<Distribution> {
        match self {
            LawPool::Any => [grid::six_laws(), grid::constant()].concat(),
            LawPool::Constant => grid::constant(),
            LawPool::ConstantOne => vec![Distribution::Constant { c: int(1) }],
            LawPool::NonConstant => grid::six_laws(),
            LawPool::Poisson => grid::poisson(),
            LawPool::Bernoulli => grid::bernoulli(),
            LawPool::Binomial => grid::binomial(),
            LawPool::Geometric => grid::geometric(),
            LawPool::NegBinomial => grid::negbinomial(),
            LawPool::Uniform => grid::uniform(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            LawPool::Any => "any",
            LawPool::Constant => "constant",
            LawPool::ConstantOne => "constant-one",
            LawPool::NonConstant => "non-constant",
            LawPool::Poisson => "poisson",
            LawPool::Bernoulli => "bernoulli",
            LawPool::Binomial => "binomial",
            LawPool::Geometric => "geometric",
            LawPool::NegBinomial => "negbinomial",
            LawPool::Uniform => "uniform",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Deformed,
    Classical,
}

/// Index ranges a case draws from, relative to the truncation order `N`:
/// `n_min <= n <= min(N - n_slack, n_cap)`, `0 <= r <= n`, `0 <= m <= m_max`.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub n_min: usize,
    pub n_slack: usize,
    pub n_cap: usize,
    pub m_max: usize,
    /// Index names reported in the record's parameters.
    pub uses: &'static [&'static str],
}

impl Shape {
    pub const RN: Shape = Shape { n_min: 0, n_slack: 0, n_cap: usize::MAX, m_max: 0, uses: &["r", "n"] };
}

/// One random draw for a case.
#[derive(Clone, Debug)]
pub struct Trial {
    pub dist: Distribution,
    pub point: QPoint,
    pub r: usize,
    pub n: usize,
    pub m: usize,
    /// Second grid numerator, for identities involving two points.
    pub c2: i64,
    pub order: usize,
}

/// An exact value produced by one side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Log(LogExt),
    Vector(Vec<Value>),
}

impl Value {
    pub fn scalars(values: impl IntoIterator<Item = Rational>) -> Self {
        Value::Vector(values.into_iter().map(Value::Scalar).collect())
    }

    /// `self - other`, or `None` when the shapes differ.
    pub fn difference(&self, other: &Value) -> Option<Value> {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Some(Value::Scalar(a - b)),
            (Value::Log(a), Value::Log(b)) => Some(Value::Log(a.clone() - b.clone())),
            (Value::Vector(a), Value::Vector(b)) if a.len() == b.len() => {
                a.iter().zip(b).map(|(x, y)| x.difference(y)).collect::<Option<Vec<_>>>().map(Value::Vector)
            }
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(r) => f.write_str(&fmt_rational(r)),
            Value::Log(l) => write!(f, "{l}"),
            Value::Vector(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

/// What a case evaluator returns.
pub enum Outcome {
    Compared { lhs: Value, rhs: Value },
    Skip(String),
}

pub type Evaluator = fn(&Trial) -> Result<Outcome>;

pub struct IdentityCase {
    pub id: &'static str,
    pub variant: Variant,
    pub expectation: Expectation,
    pub laws: LawPool,
    pub point: PointKind,
    pub shape: Shape,
    /// The identity in symbols.
    pub statement: &'static str,
    /// Reading adopted and any correction applied.
    pub notes: &'static str,
    /// `None` for non-executable cases.
    pub eval: Option<Evaluator>,
}

impl IdentityCase {
    fn key(&self) -> String {
        format!("{}|{}|{}", self.id, self.variant, self.laws.label())
    }
}

/// One case-trial line of the report.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub variant: Variant,
    pub dist: String,
    pub params: BTreeMap<String, String>,
    pub rho: Option<String>,
    pub c: Option<i64>,
    pub d: Option<u32>,
    pub order: usize,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip)]
    pub expectation: Option<Expectation>,
    #[serde(skip)]
    pub pool: Option<LawPool>,
    #[serde(skip)]
    pub trial: usize,
}

#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub records: Vec<Record>,
}

impl AuditReport {
    /// Records of expected-pass cases that failed.
    pub fn unexpected_failures(&self) -> Vec<&Record> {
        self.records
            .iter()
            .filter(|r| r.expectation == Some(Expectation::Pass) && r.status == Status::Fail)
            .collect()
    }

    pub fn records_for<'a>(&'a self, id: &'a str, variant: Variant) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.id == id && r.variant == variant)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }
}

const RHO_GRID: [(i64, i64); 8] = [(1, 2), (2, 3), (3, 4), (2, 5), (3, 2), (5, 4), (4, 3), (7, 5)];

struct Draw(ChaCha8Rng);

impl Draw {
    fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    fn between(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as i64
    }

    fn pick<T: Clone>(&mut self, items: &[T]) -> T {
        items[self.below(items.len())].clone()
    }

    /// Numerator in `[-d, 2d]`, avoiding the degenerate points `x = 0` and `x = 1`.
    fn numerator(&mut self, d: u32) -> i64 {
        let d = i64::from(d);
        loop {
            let c = self.between(-d, 2 * d);
            if c != 0 && c != d {
                return c;
            }
        }
    }

    fn trial(&mut self, case: &IdentityCase, order: usize) -> Trial {
        let dist = self.pick(&case.laws.laws());
        let (rn, rd) = RHO_GRID[self.below(RHO_GRID.len())];
        let d = self.between(1, 4) as u32;
        let c = self.numerator(d);
        let point = match case.point {
            PointKind::Deformed => QPoint::new(rat(rn, rd), c, d).expect("grid point is valid"),
            PointKind::Classical => QPoint::classical(rat(c, i64::from(d))),
        };
        let shape = case.shape;
        let n_hi = order.saturating_sub(shape.n_slack).min(shape.n_cap).max(shape.n_min);
        let n = self.between(shape.n_min as i64, n_hi as i64) as usize;
        let r = self.between(0, n as i64) as usize;
        let m = self.between(0, shape.m_max as i64) as usize;
        let c2 = self.between(-i64::from(d), 2 * i64::from(d));
        Trial { dist, point, r, n, m, c2, order }
    }
}

fn case_seed(seed: u64, key: &str) -> u64 {
    // FNV-1a, so seeds do not depend on registry order
    let hash = key.bytes().fold(0xcbf2_9ce4_8422_2325_u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3));
    hash ^ seed
}

/// Draws the trials for one case deterministically from the seed.
pub fn draw_trials(case: &IdentityCase, seed: u64, trials: usize, order: usize) -> Vec<Trial> {
    let mut draw = Draw(ChaCha8Rng::seed_from_u64(case_seed(seed, &case.key())));
    (0..trials).map(|_| draw.trial(case, order)).collect()
}

/// Evaluates both sides of `case` on one trial.
pub fn run_case(case: &IdentityCase, trial: &Trial, index: usize) -> Record {
    let mut params = trial.dist.params();
    for name in case.shape.uses {
        let value = match *name {
            "r" => trial.r.to_string(),
            "n" => trial.n.to_string(),
            "m" => trial.m.to_string(),
            "c2" => trial.c2.to_string(),
            other => unreachable!("unknown index {other}"),
        };
        params.insert((*name).to_string(), value);
    }
    let (rho, c, d) = match &trial.point {
        QPoint::Deformed { rho, c, d } => (Some(fmt_rational(rho)), Some(*c), Some(*d)),
        QPoint::Classical { x } => {
            params.insert("x".into(), fmt_rational(x));
            (None, None, None)
        }
    };
    let mut record = Record {
        id: case.id.to_string(),
        variant: case.variant,
        dist: trial.dist.name().to_string(),
        params,
        rho,
        c,
        d,
        order: trial.order,
        status: Status::NonExecutable,
        lhs: String::new(),
        rhs: String::new(),
        difference: String::new(),
        reason: None,
        expectation: Some(case.expectation),
        pool: Some(case.laws),
        trial: index,
    };
    let Some(eval) = case.eval else {
        record.reason = Some(case.notes.to_string());
        return record;
    };
    match eval(trial) {
        Ok(Outcome::Compared { lhs, rhs }) => {
            record.status = if lhs == rhs { Status::Pass } else { Status::Fail };
            record.difference = lhs.difference(&rhs).map_or_else(|| "n/a".to_string(), |v| v.to_string());
            record.lhs = lhs.to_string();
            record.rhs = rhs.to_string();
        }
        Ok(Outcome::Skip(reason)) => {
            record.status = Status::Skip;
            record.reason = Some(reason);
        }
        Err(err) => {
            record.status = Status::Skip;
            record.reason = Some(err.to_string());
        }
    }
    record
}

/// Runs the given cases at `trials` seeded draws each. Records come back
/// sorted by case id, variant, law pool and trial, whatever order the
/// parallel evaluation finished in.
pub fn run_cases(cases: &[IdentityCase], seed: u64, trials: usize, order: usize) -> AuditReport {
    let jobs: Vec<(&IdentityCase, usize, Trial)> = cases
        .iter()
        .flat_map(|case| {
            draw_trials(case, seed, trials, order).into_iter().enumerate().map(move |(i, t)| (case, i, t))
        })
        .collect();
    let mut records: Vec<Record> = jobs.par_iter().map(|(case, i, trial)| run_case(case, trial, *i)).collect();
    records.sort_by(|a, b| (&a.id, a.variant, a.pool, a.trial).cmp(&(&b.id, b.variant, b.pool, b.trial)));
    AuditReport { records }
}

/// Runs every registered case.
pub fn run_all(seed: u64, trials: usize, order: usize) -> AuditReport {
    run_cases(&registry(), seed, trials, order)
}
