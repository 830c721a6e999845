//! Dense univariate polynomials over the rationals in a formal symbol `B`.
//!
//! Used as the coefficient ring when a series is raised to a symbolic power
//! `S^B`; substituting a value for `B` afterwards recovers the scalar power.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{fmt_rational, Coeff, Rational};

/// Coefficients in ascending degree. Trailing zeros are trimmed, so the zero
/// polynomial has an empty coefficient vector and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    /// The symbol `B` itself.
    pub fn symbol() -> Self {
        Self::from_coeffs(vec![<Rational as Coeff>::zero(), <Rational as Coeff>::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Coeff::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(<Rational as Coeff>::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Substitutes `B <- value` in any ring containing the rationals (Horner).
    pub fn eval_in<R: Coeff>(&self, value: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * value.clone() + R::from_rational(c.clone()))
    }

    pub fn eval(&self, value: &Rational) -> Rational {
        self.eval_in(value)
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        self + (-rhs)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![<Rational as Coeff>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Coeff for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }
    fn one() -> Self {
        UniPoly::constant(<Rational as Coeff>::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        UniPoly::constant(r)
    }
    fn scale(&self, r: &Rational) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }
    fn inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(UniPoly::constant(self.coeffs[0].recip())),
            _ => None,
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Coeff::is_zero(*c))
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                _ => format!("{}*B^{}", fmt_rational(c), k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn trims_trailing_zeros() {
        let p = UniPoly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(UniPoly::from_coeffs(vec![int(0)]).degree(), None);
        assert!((UniPoly::symbol() - UniPoly::symbol()).is_zero());
    }

    #[test]
    fn eval_and_product() {
        // (1 + B)(1 - B) = 1 - B^2
        let a = UniPoly::from_coeffs(vec![int(1), int(1)]);
        let b = UniPoly::from_coeffs(vec![int(1), int(-1)]);
        let p = a * b;
        assert_eq!(p, UniPoly::from_coeffs(vec![int(1), int(0), int(-1)]));
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 4));
    }

    #[test]
    fn only_constants_invert() {
        assert_eq!(UniPoly::constant(rat(2, 3)).inverse(), Some(UniPoly::constant(rat(3, 2))));
        assert_eq!(UniPoly::symbol().inverse(), None);
        assert_eq!(UniPoly::default().inverse(), None);
    }
}
