//! The bosonic (q-Volkenborn) and fermionic p-adic q-integrals on Laurent
//! polynomials in `t = q^x`.
//!
//! Both integrals are linear, so they are fixed by their values on the
//! monomials `t^b = q^(b x)`. Taking the limits of the defining Riemann sums
//! over `0..p^N` gives, for rational `q > 0`, `q != 1`:
//!
//! * bosonic: `(b + 1)(q - 1)/(q^(b+1) - 1)` for `b != -1`, and `(q - 1)/ln q` at `b = -1`;
//! * fermionic: `(1 + q)/(1 + q^(b+1))` for every `b`.
//!
//! The prime never appears: the closed forms do not depend on it. Values
//! live in [`LogExt`], Laurent polynomials in the formal symbol `L = ln q`.

use crate::distributions::{moments, Distribution};
use crate::error::Result;
use crate::exact::{binomial_rat, falling_factorial, int, rat_pow, Coeff, LaurentT, LogExt, Rational};
use crate::families::{prob_qbernstein_laurent, ProbStirlingTable};
use crate::qcalc::{bracket_laurent, check_q, inverse_bracket_laurent};

fn volkenborn_monomial(b: i64, q: &Rational) -> LogExt {
    if b == -1 {
        return LogExt::log_power(q - int(1), -1);
    }
    let value = int(b + 1) * (q - int(1)) / (rat_pow(q, b + 1) - int(1));
    LogExt::constant(value)
}

fn fermionic_monomial(b: i64, q: &Rational) -> Rational {
    (int(1) + q) / (int(1) + rat_pow(q, b + 1))
}

/// `I_q(f)`, the q-Volkenborn integral.
pub fn volkenborn(f: &LaurentT, q: &Rational) -> Result<LogExt> {
    check_q(q)?;
    Ok(f.terms().fold(LogExt::zero(), |acc, (b, c)| acc + volkenborn_monomial(b, q).scale(c)))
}

/// `I_{-q}(f)`, the fermionic p-adic q-integral. Never involves `ln q`.
pub fn fermionic(f: &LaurentT, q: &Rational) -> Result<LogExt> {
    check_q(q)?;
    let value = f.terms().fold(int(0), |acc, (b, c)| acc + fermionic_monomial(b, q) * c);
    Ok(LogExt::constant(value))
}

/// Carlitz's q-Bernoulli number `beta_{r,q} = I_q([x]_q^r)`.
pub fn carlitz_beta(r: usize, q: &Rational) -> Result<LogExt> {
    check_q(q)?;
    volkenborn(&Coeff::pow(&bracket_laurent(q), r), q)
}

/// The q-Euler number `E_{r,q} = I_{-q}([x]_q^r)`.
pub fn q_euler(r: usize, q: &Rational) -> Result<LogExt> {
    check_q(q)?;
    fermionic(&Coeff::pow(&bracket_laurent(q), r), q)
}

/// `sum_{l=r}^{n} sum_{m=0}^{n-l} S_Y(n-l, m) C(n, l) ([x]_{1/q})_m B^Y_{r,l}(x, q)`
/// as a Laurent polynomial in `t`. This is the right-hand side of the
/// inversion formula that expresses `[x]_q^r` through `B^Y_{r,l}`, before
/// the normalising factor is applied.
pub fn inverse_expansion_integrand(d: &Distribution, r: usize, n: usize, q: &Rational) -> Result<LaurentT> {
    check_q(q)?;
    let stirling = ProbStirlingTable::new(d, n)?;
    let inv = inverse_bracket_laurent(q);
    let falling: Vec<LaurentT> = (0..=n).map(|m| falling_factorial(&inv, m)).collect();
    let mut total = LaurentT::zero();
    for l in r..=n {
        let basis = prob_qbernstein_laurent(d, r, l, q)?;
        let weight = (0..=n - l).fold(LaurentT::zero(), |acc, m| acc + falling[m].scale(&stirling.get(n - l, m)));
        total = total + (weight * basis).scale(&binomial_rat(n, l));
    }
    Ok(total)
}

/// Bosonic and fermionic integrals of the two integrands used by the
/// corollaries: the polynomial `B^Y_{r,n}` itself, and the inversion-formula
/// sum from [`inverse_expansion_integrand`].
#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryIntegrals {
    pub bernstein: (LogExt, LogExt),
    pub inverse_expansion: (LogExt, LogExt),
    /// `E[Y^(n-r)]`, the normaliser of the inversion formula.
    pub moment: Rational,
}

pub fn integrate_corollaries(d: &Distribution, r: usize, n: usize, q: &Rational) -> Result<CorollaryIntegrals> {
    let basis = prob_qbernstein_laurent(d, r, n, q)?;
    let inverse = inverse_expansion_integrand(d, r, n, q)?;
    let moment = moments(d, n - r)?.pop().expect("non-empty");
    Ok(CorollaryIntegrals {
        bernstein: (volkenborn(&basis, q)?, fermionic(&basis, q)?),
        inverse_expansion: (volkenborn(&inverse, q)?, fermionic(&inverse, q)?),
        moment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{laurent_x_derivation, rat};

    const QS: [(i64, i64); 3] = [(4, 9), (3, 2), (9, 4)];

    #[test]
    fn monomial_examples() {
        let q = rat(4, 9);
        assert_eq!(volkenborn(&LaurentT::one(), &q).unwrap(), LogExt::one());
        assert_eq!(volkenborn(&LaurentT::var(), &q).unwrap(), LogExt::constant(rat(18, 13)));
        let inv_t = LaurentT::monomial(int(1), -1);
        assert_eq!(volkenborn(&inv_t, &q).unwrap(), LogExt::log_power(rat(-5, 9), -1));
        assert_eq!(fermionic(&LaurentT::one(), &q).unwrap(), LogExt::one());
        assert_eq!(fermionic(&LaurentT::var(), &q).unwrap(), LogExt::constant((int(1) + &q) / (int(1) + &q * &q)));
        assert_eq!(fermionic(&inv_t, &q).unwrap(), LogExt::constant((int(1) + &q) / int(2)));
    }

    #[test]
    fn number_examples() {
        for &(a, b) in &QS {
            let q = rat(a, b);
            assert_eq!(carlitz_beta(0, &q).unwrap(), LogExt::one());
            assert_eq!(carlitz_beta(1, &q).unwrap(), LogExt::constant(-(int(1) + &q).recip()));
            assert_eq!(q_euler(1, &q).unwrap(), LogExt::constant(-&q / (int(1) + &q * &q)));
        }
    }

    #[test]
    fn numbers_are_log_free() {
        for &(a, b) in &QS {
            let q = rat(a, b);
            for r in 0..8 {
                assert!(carlitz_beta(r, &q).unwrap().is_log_free());
                assert!(q_euler(r, &q).unwrap().is_log_free());
            }
        }
    }

    fn shift(f: &LaurentT, q: &Rational) -> LaurentT {
        f.map_terms(|b, c| c * rat_pow(q, b))
    }

    #[test]
    fn bosonic_functional_equation() {
        for &(a, b) in &QS {
            let q = rat(a, b);
            let qm1_over_l = LogExt::log_power(&q - int(1), -1);
            for beta in -6..=6 {
                let f = LaurentT::monomial(int(1), beta);
                let lhs = volkenborn(&shift(&f, &q), &q).unwrap().scale(&q);
                let f0 = f.eval(&int(1));
                let df0: LogExt = laurent_x_derivation(&f).eval(&int(1));
                let rhs = volkenborn(&f, &q).unwrap() + LogExt::constant((&q - int(1)) * f0) + qm1_over_l.clone() * df0;
                assert_eq!(lhs, rhs, "beta = {beta}, q = {q}");
            }
        }
    }

    #[test]
    fn fermionic_functional_equation() {
        for &(a, b) in &QS {
            let q = rat(a, b);
            for beta in -6..=6 {
                let f = LaurentT::monomial(int(1), beta);
                let lhs = fermionic(&shift(&f, &q), &q).unwrap().scale(&q) + fermionic(&f, &q).unwrap();
                assert_eq!(lhs, LogExt::constant((int(1) + &q) * f.eval(&int(1))));
            }
        }
    }

    #[test]
    fn linearity() {
        let q = rat(3, 2);
        let f = LaurentT::from_terms([(2, rat(1, 3)), (-1, int(2))]);
        let g = LaurentT::from_terms([(0, int(5)), (1, rat(-7, 4)), (-3, int(1))]);
        let h = LaurentT::from_terms([(4, rat(2, 9))]);
        let (a, b, c) = (rat(3, 5), int(-2), rat(1, 7));
        let combo = f.scale(&a) + g.scale(&b) + h.scale(&c);
        for op in [volkenborn, fermionic] {
            let expected = op(&f, &q).unwrap().scale(&a) + op(&g, &q).unwrap().scale(&b) + op(&h, &q).unwrap().scale(&c);
            assert_eq!(op(&combo, &q).unwrap(), expected);
        }
    }

    #[test]
    fn corollary_integrals_trivial_case() {
        let q = rat(4, 9);
        for d in [Distribution::Poisson { alpha: rat(2, 3) }, Distribution::Uniform01] {
            let out = integrate_corollaries(&d, 0, 0, &q).unwrap();
            assert_eq!(out.bernstein, (LogExt::one(), LogExt::one()));
            assert_eq!(out.inverse_expansion, (LogExt::one(), LogExt::one()));
        }
    }

    #[test]
    fn corollary_integral_of_reflected_bracket() {
        // Y = 1, r = 0, n = 1: the integrand is [1-x]_q = (q t^-1 - 1)/(q - 1).
        let q = rat(4, 9);
        let one = Distribution::Constant { c: int(1) };
        let out = integrate_corollaries(&one, 0, 1, &q).unwrap();
        let k = (&q - int(1)).recip();
        let expected = LogExt::log_power(&q * &k * (&q - int(1)), -1) + LogExt::constant(-k);
        assert_eq!(out.bernstein.0, expected);
        assert!(!out.bernstein.0.is_log_free());
    }

    #[test]
    fn poisson_integral_is_exact() {
        let q = rat(4, 9);
        let d = Distribution::Poisson { alpha: int(1) };
        let out = integrate_corollaries(&d, 1, 2, &q).unwrap();
        let basis = prob_qbernstein_laurent(&d, 1, 2, &q).unwrap();
        assert_eq!(out.bernstein.0, volkenborn(&basis, &q).unwrap());
        assert!(out.bernstein.1.is_log_free());
    }
}
