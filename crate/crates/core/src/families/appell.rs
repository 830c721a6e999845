//! Bernoulli, Euler, Frobenius-Euler and Bell families, classical and
//! probabilistic. Each `*_gf` builds the generating function through a
//! given order; the value functions extract one coefficient.

use crate::distributions::{mgf_series, Distribution};
use crate::error::{Error, Result};
use crate::exact::{int, Coeff, Rational};
use crate::series::Series;

fn exp_minus_one(order: usize) -> Series<Rational> {
    Series::exponential(&int(1), order).sub(&Series::one(order)).expect("same order")
}

/// `exp(x (e^v - 1))`.
pub fn bell_gf<R: Coeff>(x: &R, order: usize) -> Series<R> {
    exp_minus_one(order).lift::<R>().mul_scalar(x).exp().expect("zero constant term")
}

/// Bell (Touchard) polynomial `phi_n(x)`.
pub fn bell_poly<R: Coeff>(n: usize, x: &R) -> R {
    bell_gf(x, n).egf_coeff(n).expect("within order")
}

/// `(v/(e^v - 1))^order e^(x v)`.
pub fn higher_bernoulli_gf<R: Coeff>(power: &R, x: &R, order: usize) -> Series<R> {
    // (e^v - 1)/v has unit constant term, so its reciprocal can be powered.
    let quotient = exp_minus_one(order + 1).shift_down(1).expect("divisible by v");
    let base = quotient.recip().expect("unit constant").lift::<R>();
    let powered = base.pow(power).expect("unit constant");
    powered.mul(&Series::exponential(x, order)).expect("same order")
}

/// Bernoulli polynomial of higher order `B_n^(power)(x)`.
pub fn higher_bernoulli<R: Coeff>(n: usize, power: &R, x: &R) -> R {
    higher_bernoulli_gf(power, x, n).egf_coeff(n).expect("within order")
}

/// `2/(e^v + 1) e^(x v)`.
pub fn euler_gf<R: Coeff>(x: &R, order: usize) -> Series<R> {
    let denom = Series::exponential(&int(1), order).add(&Series::one(order)).expect("same order");
    let front = denom.recip().expect("constant term 2").scale(&int(2)).lift::<R>();
    front.mul(&Series::exponential(x, order)).expect("same order")
}

pub fn euler_poly<R: Coeff>(n: usize, x: &R) -> R {
    euler_gf(x, n).egf_coeff(n).expect("within order")
}

/// `((1 - u)/(e^v - u))^power e^(x v)`, `u != 1`.
pub fn frobenius_euler_gf<R: Coeff>(power: &R, x: &R, u: &Rational, order: usize) -> Result<Series<R>> {
    if *u == int(1) {
        return Err(Error::InvalidParameter("Frobenius-Euler parameter u must differ from 1".into()));
    }
    let shifted = Series::exponential(&int(1), order).sub(&Series::constant(u.clone(), order))?;
    // (e^v - u)/(1 - u) has constant term 1
    let unit = shifted.scale(&(int(1) - u).recip());
    let base = unit.recip()?.lift::<R>();
    base.pow(power)?.mul(&Series::exponential(x, order))
}

/// Frobenius-Euler polynomial `H_n^(power)(x | u)`.
pub fn frobenius_euler<R: Coeff>(n: usize, power: &R, x: &R, u: &Rational) -> Result<R> {
    frobenius_euler_gf(power, x, u, n)?.egf_coeff(n)
}

/// `(v/(M - 1))^r M^z` for the moment generating function `M` of `d`.
///
/// `v/(M - 1)` has constant term `1/E[Y]`; the series is powered after
/// rescaling to a unit constant term and the factor `E[Y]^-r` is restored
/// afterwards.
pub fn prob_bernoulli_higher_gf<R: Coeff>(d: &Distribution, r: usize, z: &R, order: usize) -> Result<Series<R>> {
    let mgf = mgf_series(d, order + 1)?;
    let quotient = mgf.sub(&Series::one(order + 1))?.shift_down(1)?;
    let mean = quotient.coeff(0);
    if Coeff::is_zero(&mean) {
        return Err(Error::ZeroMean);
    }
    let unit = quotient.scale(&mean.recip()).recip()?;
    let front = unit.lift::<R>().pow(&R::from_int(r as i64))?.scale(&Coeff::pow(&mean.recip(), r));
    let tail = mgf.truncate(order).lift::<R>().pow(z)?;
    front.mul(&tail)
}

/// Probabilistic Bernoulli polynomial of higher order `beta^(r)_{n,Y}(z)`.
pub fn prob_bernoulli_higher<R: Coeff>(d: &Distribution, n: usize, r: usize, z: &R) -> Result<R> {
    prob_bernoulli_higher_gf(d, r, z, n)?.egf_coeff(n)
}

/// Probabilistic Bernoulli polynomial `beta^Y_n(z)`.
pub fn prob_bernoulli<R: Coeff>(d: &Distribution, n: usize, z: &R) -> Result<R> {
    prob_bernoulli_higher(d, n, 1, z)
}

/// `2/(M + 1) M^z`.
pub fn prob_euler_gf<R: Coeff>(d: &Distribution, z: &R, order: usize) -> Result<Series<R>> {
    let mgf = mgf_series(d, order)?;
    let front = mgf.add(&Series::one(order))?.recip()?.scale(&int(2)).lift::<R>();
    front.mul(&mgf.lift::<R>().pow(z)?)
}

/// Probabilistic Euler polynomial `E^Y_n(z)`.
pub fn prob_euler<R: Coeff>(d: &Distribution, n: usize, z: &R) -> Result<R> {
    prob_euler_gf(d, z, n)?.egf_coeff(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, UniPoly};

    #[test]
    fn bell_examples() {
        assert_eq!(bell_poly(0, &rat(5, 3)), int(1));
        // phi_2(x) = x^2 + x as a polynomial
        let x = UniPoly::symbol();
        assert_eq!(bell_poly(2, &x), UniPoly::from_coeffs(vec![int(0), int(1), int(1)]));
        assert_eq!(bell_poly(3, &int(1)), int(5));
    }

    #[test]
    fn higher_bernoulli_examples() {
        assert_eq!(higher_bernoulli(1, &int(1), &int(0)), rat(-1, 2));
        assert_eq!(higher_bernoulli(0, &rat(7, 3), &rat(-2, 5)), int(1));
        let x = rat(3, 4);
        assert_eq!(higher_bernoulli(5, &int(0), &x), Coeff::pow(&x, 5));
        // B_2 = 1/6, B_4 = -1/30
        assert_eq!(higher_bernoulli(2, &int(1), &int(0)), rat(1, 6));
        assert_eq!(higher_bernoulli(4, &int(1), &int(0)), rat(-1, 30));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_poly(0, &rat(2, 9)), int(1));
        assert_eq!(euler_poly(1, &int(0)), rat(-1, 2));
        assert_eq!(euler_poly(1, &rat(1, 2)), int(0));
        assert_eq!(euler_poly(3, &rat(1, 2)), int(0));
    }

    #[test]
    fn frobenius_euler_examples() {
        let u = rat(2, 5);
        assert_eq!(frobenius_euler(0, &rat(3, 2), &rat(1, 7), &u).unwrap(), int(1));
        let x = rat(-4, 3);
        assert_eq!(frobenius_euler(4, &int(0), &x, &u).unwrap(), Coeff::pow(&x, 4));
        for n in 0..8 {
            assert_eq!(frobenius_euler(n, &int(1), &x, &int(-1)).unwrap(), euler_poly(n, &x));
        }
        assert!(frobenius_euler(2, &int(1), &x, &int(1)).is_err());
    }

    #[test]
    fn probabilistic_families_reduce_at_y_one() {
        let one = Distribution::Constant { c: int(1) };
        let x = rat(2, 7);
        for n in 0..8 {
            assert_eq!(prob_euler(&one, n, &x).unwrap(), euler_poly(n, &x));
            assert_eq!(prob_bernoulli(&one, n, &x).unwrap(), higher_bernoulli(n, &int(1), &x));
            assert_eq!(prob_bernoulli_higher(&one, n, 3, &x).unwrap(), higher_bernoulli(n, &int(3), &x));
        }
    }

    #[test]
    fn probabilistic_constant_terms() {
        let d = Distribution::Poisson { alpha: rat(2, 3) };
        assert_eq!(prob_euler(&d, 0, &rat(5, 2)).unwrap(), int(1));
        // constant term of v/(M - 1) is 1/E[Y]
        assert_eq!(prob_bernoulli(&d, 0, &int(0)).unwrap(), rat(3, 2));
        assert_eq!(prob_bernoulli_higher(&d, 0, 2, &int(0)).unwrap(), rat(9, 4));
        for n in 0..5 {
            let expected = if n == 0 { int(1) } else { int(0) };
            assert_eq!(prob_bernoulli_higher(&d, n, 0, &int(0)).unwrap(), expected);
        }
    }

    #[test]
    fn zero_mean_is_rejected() {
        let d = Distribution::CustomMoments { moments: vec![int(1), int(0), int(1), int(0), int(3)] };
        assert_eq!(prob_bernoulli(&d, 2, &int(0)), Err(Error::ZeroMean));
    }

    #[test]
    fn higher_bernoulli_symbolic_order() {
        // B_1^(a)(0) = -a/2 as a polynomial in the order
        let a = UniPoly::symbol();
        let b1 = higher_bernoulli(1, &a, &UniPoly::zero());
        assert_eq!(b1, UniPoly::from_coeffs(vec![int(0), rat(-1, 2)]));
    }
}
