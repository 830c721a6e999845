//! Moment providers: each supported law yields its exact moments `E[Y^n]`
//! and its moment generating function `E[e^(vY)]` as a truncated series.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, int, is_positive, Coeff, Rational};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distribution {
    Poisson { alpha: Rational },
    Bernoulli { p1: Rational },
    Binomial { trials: u32, p1: Rational },
    /// Number of trials up to and including the first success (support starts at 1).
    Geometric { p1: Rational },
    /// Sum of `a` independent geometric variables.
    NegBinomial { a: u32, p1: Rational },
    Uniform01,
    Constant { c: Rational },
    /// Arbitrary moment sequence `E[Y^0], E[Y^1], ...` with `E[Y^0] = 1`.
    CustomMoments { moments: Vec<Rational> },
}

impl Distribution {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        let check_p = |p: &Rational| -> Result<()> {
            if !is_positive(p) || *p > int(1) {
                return Err(Error::InvalidParameter(format!("p1 must lie in (0, 1], got {}", fmt_rational(p))));
            }
            Ok(())
        };
        match self {
            Distribution::Poisson { alpha } if !is_positive(alpha) => {
                bad(format!("alpha must be positive, got {}", fmt_rational(alpha)))
            }
            Distribution::Bernoulli { p1 } | Distribution::Geometric { p1 } => check_p(p1),
            Distribution::Binomial { trials, p1 } => {
                if *trials == 0 {
                    return bad("binomial trial count must be positive".into());
                }
                check_p(p1)
            }
            Distribution::NegBinomial { a, p1 } => {
                if *a == 0 {
                    return bad("negative binomial a must be at least 1".into());
                }
                check_p(p1)
            }
            Distribution::CustomMoments { moments } if moments.first().is_none_or(|m0| !m0.is_one()) => {
                bad("custom moment sequence must start with 1".into())
            }
            _ => Ok(()),
        }
    }

    /// Short lowercase name, as used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Distribution::Poisson { .. } => "poisson",
            Distribution::Bernoulli { .. } => "bernoulli",
            Distribution::Binomial { .. } => "binomial",
            Distribution::Geometric { .. } => "geometric",
            Distribution::NegBinomial { .. } => "negbinomial",
            Distribution::Uniform01 => "uniform",
            Distribution::Constant { .. } => "constant",
            Distribution::CustomMoments { .. } => "custom",
        }
    }

    /// Named parameters rendered exactly.
    pub fn params(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        match self {
            Distribution::Poisson { alpha } => {
                out.insert("alpha".into(), fmt_rational(alpha));
            }
            Distribution::Bernoulli { p1 } | Distribution::Geometric { p1 } => {
                out.insert("p1".into(), fmt_rational(p1));
            }
            Distribution::Binomial { trials, p1 } => {
                out.insert("nbar".into(), trials.to_string());
                out.insert("p1".into(), fmt_rational(p1));
            }
            Distribution::NegBinomial { a, p1 } => {
                out.insert("a".into(), a.to_string());
                out.insert("p1".into(), fmt_rational(p1));
            }
            Distribution::Uniform01 => {}
            Distribution::Constant { c } => {
                out.insert("value".into(), fmt_rational(c));
            }
            Distribution::CustomMoments { moments } => {
                let joined: Vec<String> = moments.iter().map(fmt_rational).collect();
                out.insert("moments".into(), joined.join(","));
            }
        }
        out
    }

    /// True for laws concentrated on a single value.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Distribution::Constant { .. })
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

/// `1 - p1 + p1 e^v`.
fn bernoulli_mgf(p1: &Rational, order: usize) -> Series<Rational> {
    let e = Series::exponential(&int(1), order).scale(p1);
    Series::constant(int(1) - p1, order).add(&e).expect("same order")
}

/// `p1 e^v / (1 - (1 - p1) e^v)`.
fn geometric_mgf(p1: &Rational, order: usize) -> Result<Series<Rational>> {
    let e = Series::exponential(&int(1), order);
    let denom = Series::one(order).sub(&e.scale(&(int(1) - p1)))?;
    e.scale(p1).mul(&denom.recip()?)
}

/// The moment generating function `E[e^(vY)]` truncated at `order`.
pub fn mgf_series(d: &Distribution, order: usize) -> Result<Series<Rational>> {
    d.validate()?;
    match d {
        Distribution::Poisson { alpha } => {
            // exp(alpha (e^v - 1))
            let inner = Series::exponential(&int(1), order).sub(&Series::one(order))?.scale(alpha);
            inner.exp()
        }
        Distribution::Bernoulli { p1 } => Ok(bernoulli_mgf(p1, order)),
        Distribution::Binomial { trials, p1 } => bernoulli_mgf(p1, order).pow(&int(i64::from(*trials))),
        Distribution::Geometric { p1 } => geometric_mgf(p1, order),
        Distribution::NegBinomial { a, p1 } => geometric_mgf(p1, order)?.pow(&int(i64::from(*a))),
        Distribution::Uniform01 => {
            // (e^v - 1)/v has egf coefficients 1/(n + 1)
            Ok(Series::from_egf((0..=order).map(|n| Rational::new(1.into(), (n as i64 + 1).into())), order))
        }
        Distribution::Constant { c } => Ok(Series::exponential(c, order)),
        Distribution::CustomMoments { moments } => {
            if moments.len() <= order {
                return Err(Error::InsufficientOrder { needed: order, order: moments.len().saturating_sub(1) });
            }
            Ok(Series::from_egf(moments.iter().cloned(), order))
        }
    }
}

/// `E[Y^n]`, read off the moment generating function.
pub fn moment(d: &Distribution, n: usize) -> Result<Rational> {
    mgf_series(d, n)?.egf_coeff(n)
}

/// `E[Y^0..=Y^order]` from a single series expansion.
pub fn moments(d: &Distribution, order: usize) -> Result<Vec<Rational>> {
    let m = mgf_series(d, order)?;
    (0..=order).map(|n| m.egf_coeff(n)).collect()
}

/// Fixed admissible parameter grids used for seeded random draws.
pub mod grid {
    use super::Distribution;
    use crate::exact::rat;

    pub fn poisson() -> Vec<Distribution> {
        [(1, 2), (2, 3), (1, 1), (3, 2), (2, 1)].iter().map(|&(a, b)| Distribution::Poisson { alpha: rat(a, b) }).collect()
    }

    fn probabilities() -> Vec<crate::exact::Rational> {
        vec![rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4)]
    }

    pub fn bernoulli() -> Vec<Distribution> {
        probabilities().into_iter().map(|p1| Distribution::Bernoulli { p1 }).collect()
    }

    pub fn binomial() -> Vec<Distribution> {
        let mut out = Vec::new();
        for trials in [1, 2, 3, 5] {
            for p1 in probabilities() {
                out.push(Distribution::Binomial { trials, p1 });
            }
        }
        out
    }

    pub fn geometric() -> Vec<Distribution> {
        probabilities().into_iter().map(|p1| Distribution::Geometric { p1 }).collect()
    }

    pub fn negbinomial() -> Vec<Distribution> {
        let mut out = Vec::new();
        for a in [1, 2, 3] {
            for p1 in probabilities() {
                out.push(Distribution::NegBinomial { a, p1 });
            }
        }
        out
    }

    pub fn uniform() -> Vec<Distribution> {
        vec![Distribution::Uniform01]
    }

    pub fn constant() -> Vec<Distribution> {
        [(1, 1), (2, 1), (1, 2), (-1, 3), (3, 2)].iter().map(|&(a, b)| Distribution::Constant { c: rat(a, b) }).collect()
    }

    /// The six non-degenerate laws.
    pub fn six_laws() -> Vec<Distribution> {
        [poisson(), bernoulli(), binomial(), geometric(), negbinomial(), uniform()].concat()
    }
}
