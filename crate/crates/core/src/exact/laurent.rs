//! Sparse Laurent polynomials `sum c_k s^k` with integer exponents.
//!
//! Two instances matter: polynomials in `t = q^x` ([`LaurentT`]) and
//! polynomials in the formal symbol `L = ln q` ([`LogExt`]). `L` is never
//! evaluated numerically; equality is coefficientwise.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use super::{fmt_rational, int, rat_pow, Coeff, Rational};

pub trait Indeterminate: Clone + fmt::Debug + PartialEq + Eq + Default + Send + Sync {
    const NAME: &'static str;
}

/// The variable `t`, standing for `q^x`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VarT;

/// The variable `L`, standing for `ln q`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VarL;

impl Indeterminate for VarT {
    const NAME: &'static str = "t";
}

impl Indeterminate for VarL {
    const NAME: &'static str = "L";
}

/// No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<C, V> {
    terms: BTreeMap<i64, C>,
    _var: PhantomData<V>,
}

pub type LaurentT = Laurent<Rational, VarT>;
pub type LogExt = Laurent<Rational, VarL>;
/// Laurent polynomial in `t` whose coefficients may carry powers of `ln q`.
pub type LaurentTLog = Laurent<LogExt, VarT>;

impl<C: Coeff, V: Indeterminate> Default for Laurent<C, V> {
    fn default() -> Self {
        Laurent { terms: BTreeMap::new(), _var: PhantomData }
    }
}

impl<C: Coeff, V: Indeterminate> Laurent<C, V> {
    pub fn monomial(c: C, exp: i64) -> Self {
        let mut out = Self::default();
        out.add_term(exp, c);
        out
    }

    /// The bare variable.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::default();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes a nonzero rational for the variable.
    pub fn eval(&self, value: &Rational) -> C {
        self.terms
            .iter()
            .fold(C::zero(), |acc, (k, c)| acc + c.scale(&rat_pow(value, *k)))
    }

    /// Applies `c_k s^k -> f(k, c_k) s^k` termwise.
    pub fn map_terms<D: Coeff, W: Indeterminate>(&self, f: impl Fn(i64, &C) -> D) -> Laurent<D, W> {
        Laurent::from_terms(self.terms.iter().map(|(k, c)| (*k, f(*k, c))))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

impl<C: Coeff, V: Indeterminate> Add for Laurent<C, V> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<C: Coeff, V: Indeterminate> Neg for Laurent<C, V> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(), _var: PhantomData }
    }
}

impl<C: Coeff, V: Indeterminate> Sub for Laurent<C, V> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coeff, V: Indeterminate> Mul for Laurent<C, V> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Coeff, V: Indeterminate> Coeff for Laurent<C, V> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(C::from_rational(r))
    }
    fn scale(&self, r: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.scale(r))))
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.inverse()?, -k))
    }
}

impl<V: Indeterminate> fmt::Display for Laurent<Rational, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                _ => format!("{}*{}^{}", fmt_rational(c), V::NAME, k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for LaurentTLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})*t^{k}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl LogExt {
    /// `L^k` with coefficient `c`.
    pub fn log_power(c: Rational, k: i64) -> Self {
        Self::monomial(c, k)
    }

    /// True when no power of `L` other than `L^0` appears.
    pub fn is_log_free(&self) -> bool {
        self.terms.keys().all(|k| *k == 0)
    }
}

/// The derivation `d/dx` on Laurent polynomials in `t = q^x`:
/// `t^b -> b L t^b`, since `d/dx q^(b x) = b ln q q^(b x)`.
pub fn laurent_x_derivation(f: &LaurentT) -> LaurentTLog {
    f.map_terms(|k, c| LogExt::log_power(c * int(k), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn derivation_examples() {
        let t2 = LaurentT::monomial(int(1), 2);
        assert_eq!(laurent_x_derivation(&t2), LaurentTLog::monomial(LogExt::log_power(int(2), 1), 2));
        assert!(laurent_x_derivation(&LaurentT::constant(int(7))).is_zero());
        let f = LaurentT::monomial(int(3), -1);
        assert_eq!(laurent_x_derivation(&f), LaurentTLog::monomial(LogExt::log_power(int(-3), 1), -1));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = LaurentT::from_terms([(1, int(2)), (-2, int(1))]);
        let b = LaurentT::from_terms([(1, int(-2))]);
        let s = a + b;
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(-2), int(1));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let f = LaurentT::from_terms([(-1, int(3)), (2, rat(1, 2))]);
        assert_eq!(f.eval(&rat(2, 3)), rat(9, 2) + rat(2, 9));
    }

    #[test]
    fn monomials_invert() {
        let m = LogExt::log_power(rat(-5, 9), -1);
        assert_eq!(m.inverse(), Some(LogExt::log_power(rat(-9, 5), 1)));
        assert_eq!((LogExt::var() + LogExt::one()).inverse(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(LogExt::log_power(rat(-5, 9), -1).to_string(), "-5/9*L^-1");
        assert_eq!(LaurentT::zero().to_string(), "0");
        assert_eq!(LaurentT::from_terms([(0, int(1)), (1, int(2))]).to_string(), "1 + 2*t^1");
    }
}
