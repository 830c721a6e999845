//! Truncated formal power series in `v` over an exact coefficient ring.
//!
//! A series of order `N` stores the ordinary coefficients `a_0..a_N` of
//! `v^0..v^N`. Exponential-generating-function values are read off with
//! [`Series::egf_coeff`], which returns `n! a_n`. Results are exact through
//! order `N`; nothing beyond it is tracked.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{factorial_rat, int, Coeff, Rational};

pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Series<R> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    /// Builds a series from its exponential coefficients `c_n`, i.e. `sum c_n v^n / n!`.
    pub fn from_egf(egf: impl IntoIterator<Item = R>, order: usize) -> Self {
        let coeffs = egf
            .into_iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, c)| c.scale(&factorial_rat(n).recip()))
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// `c v^k`, or zero if `k` exceeds the order.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `e^(a v) = sum a^n v^n / n!`.
    pub fn exponential(a: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = R::one();
        for n in 0..=order {
            coeffs.push(power.scale(&factorial_rat(n).recip()));
            power = power * a.clone();
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Ordinary coefficient of `v^k`; zero beyond the stored order.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `n! a_n`.
    pub fn egf_coeff(&self, n: usize) -> Result<R> {
        if n > self.order() {
            return Err(Error::InsufficientOrder { needed: n, order: self.order() });
        }
        Ok(self.coeffs[n].scale(&factorial_rat(n)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect() })
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect() }
    }

    /// `S^m` by repeated multiplication.
    pub fn pow_int(&self, m: usize) -> Result<Self> {
        (0..m).try_fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// The `T` with `S T = 1` through the order.
    pub fn recip(&self) -> Result<Self> {
        let b0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let mut out = vec![b0.clone()];
        for n in 1..=self.order() {
            let acc = (1..=n).fold(R::zero(), |acc, k| acc + self.coeffs[k].clone() * out[n - k].clone());
            out.push(-(b0.clone() * acc));
        }
        Ok(Series { coeffs: out })
    }

    /// Exponential of a series with zero constant term, from `E' = S' E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0" });
        }
        let mut out = vec![R::one()];
        for n in 1..=self.order() {
            let acc = (1..=n).fold(R::zero(), |acc, k| {
                acc + self.coeffs[k].scale(&int(k as i64)) * out[n - k].clone()
            });
            out.push(acc.scale(&int(n as i64).recip()));
        }
        Ok(Series { coeffs: out })
    }

    /// Logarithm of a series with unit constant term, from `S L' = S'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        let mut out = vec![R::zero()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].scale(&int(n as i64));
            for k in 1..n {
                acc = acc - out[k].scale(&int(k as i64)) * self.coeffs[n - k].clone();
            }
            out.push(acc.scale(&int(n as i64).recip()));
        }
        Ok(Series { coeffs: out })
    }

    /// `S^beta = exp(beta log S)` for a unit-constant series and any ring element `beta`.
    pub fn pow(&self, beta: &R) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        self.log()?.mul_scalar(beta).exp()
    }

    /// Termwise derivative; the order drops by one (a constant of order 0 stays order 0).
    pub fn derive(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=n).map(|k| self.coeffs[k].scale(&int(k as i64))).collect();
        Self::from_coeffs(coeffs, n - 1)
    }

    /// Multiplies by `v^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); k.min(n + 1)];
        coeffs.extend(self.coeffs.iter().take((n + 1).saturating_sub(k)).cloned());
        Self::from_coeffs(coeffs, n)
    }

    /// Divides by `v^k`; the first `k` coefficients must vanish and the
    /// order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InsufficientOrder { needed: k, order: self.order() });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::ConstantTerm { expected: "0 (series not divisible by v)" });
        }
        Ok(Self::from_coeffs(self.coeffs[k..].to_vec(), self.order() - k))
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl Series<Rational> {
    /// Embeds a rational series into another coefficient ring.
    pub fn lift<S: Coeff>(&self) -> Series<S> {
        self.map(|c| S::from_rational(c.clone()))
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*v^{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
