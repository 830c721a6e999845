//! Exact scalars and the small ring tower everything else computes over.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms. On top
//! of it sit dense polynomials in a formal exponent symbol ([`UniPoly`]) and
//! sparse Laurent polynomials ([`Laurent`]), used both for `t = q^x`
//! ([`LaurentT`]) and for the formal logarithm `L = ln q` ([`LogExt`]).

mod laurent;
mod unipoly;

pub use laurent::{laurent_x_derivation, Indeterminate, Laurent, LaurentT, LaurentTLog, LogExt, VarL, VarT};
pub use unipoly::UniPoly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` exactly. Rejects zero denominators and anything
/// that is not an integer ratio.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `base^exp` for any integer exponent. Panics if `base` is zero and `exp < 0`.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = <Rational as One>::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn binomial_rat(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn factorial_rat(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// An exact commutative ring containing the rationals.
///
/// Every coefficient ring used by the series engine implements this: plain
/// rationals, polynomials in the exponent symbol, and Laurent polynomials.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, m: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..m {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `z (z - 1) ... (z - m + 1)`; the empty product for `m = 0`.
pub fn falling_factorial<R: Coeff>(z: &R, m: usize) -> R {
    (0..m).fold(R::one(), |acc, j| acc * (z.clone() - R::from_int(j as i64)))
}

/// `falling_factorial(z, m) / m!`.
pub fn generalized_binomial<R: Coeff>(z: &R, m: usize) -> R {
    falling_factorial(z, m).scale(&factorial_rat(m).recip())
}

/// Sign helper `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

pub(crate) fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}
