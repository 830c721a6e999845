//! Bernstein bases: classical, q-deformed, and the probabilistic
//! q-Bernstein polynomials `B^Y_{r,n}(x, q)`, whose generating function
//! `(v [x]_q)^r / r! * E[e^(vY)]^([1-x]_q)` is the ground truth for every
//! identity audited by this crate.

use crate::distributions::{mgf_series, Distribution};
use crate::error::{Error, Result};
use crate::exact::{binomial_rat, factorial_rat, int, Coeff, LaurentT, Rational, UniPoly};
use crate::qcalc::{bracket_laurent, check_q, reflected_bracket_laurent, QPoint};
use crate::series::Series;

fn check_indices(r: usize, n: usize) -> Result<()> {
    if r > n {
        return Err(Error::IndexOutOfRange { r, n });
    }
    Ok(())
}

/// `C(n, r) x^r (1 - x)^(n - r)`.
pub fn bernstein_classical(r: usize, n: usize, x: &Rational) -> Result<Rational> {
    check_indices(r, n)?;
    Ok(binomial_rat(n, r) * Coeff::pow(x, r) * Coeff::pow(&(int(1) - x), n - r))
}

/// `(v [x]_q)^r / r! * e^([1-x]_q v)`.
pub fn qbernstein_gf(r: usize, p: &QPoint, order: usize) -> Series<Rational> {
    let (_, refl) = p.bracket_conjugates();
    let lead = Series::monomial(Coeff::pow(&p.bracket(), r) / factorial_rat(r), r, order);
    lead.mul(&Series::exponential(&refl, order)).expect("same order")
}

/// q-Bernstein basis polynomial `B_{r,n}(x, q)`.
pub fn qbernstein(r: usize, n: usize, p: &QPoint) -> Result<Rational> {
    check_indices(r, n)?;
    qbernstein_gf(r, p, n).egf_coeff(n)
}

/// `(v [x]_q)^r / r! * M^([1-x]_q)` through `order`.
pub fn prob_qbernstein_gf(d: &Distribution, r: usize, p: &QPoint, order: usize) -> Result<Series<Rational>> {
    let (_, refl) = p.bracket_conjugates();
    let lead = Series::monomial(Coeff::pow(&p.bracket(), r) / factorial_rat(r), r, order);
    lead.mul(&mgf_series(d, order)?.pow(&refl)?)
}

/// Probabilistic q-Bernstein polynomial `B^Y_{r,n}(x, q)`.
pub fn prob_qbernstein(d: &Distribution, r: usize, n: usize, p: &QPoint, order: usize) -> Result<Rational> {
    check_indices(r, n)?;
    if n > order {
        return Err(Error::InsufficientOrder { needed: n, order });
    }
    prob_qbernstein_gf(d, r, p, order)?.egf_coeff(n)
}

/// `B^Y_{r,n}(x, q)` as a Laurent polynomial in `t = q^x` for fixed `q`.
///
/// The moment generating function is raised to a symbolic power `B`; the
/// coefficient of index `n - r` is then a polynomial in `B`, into which
/// `[1-x]_q = (q t^-1 - 1)/(q - 1)` is substituted.
pub fn prob_qbernstein_laurent(d: &Distribution, r: usize, n: usize, q: &Rational) -> Result<LaurentT> {
    check_indices(r, n)?;
    check_q(q)?;
    let k = n - r;
    let powered = mgf_series(d, k)?.lift::<UniPoly>().pow(&UniPoly::symbol())?;
    let in_symbol = powered.egf_coeff(k)?;
    let tail = in_symbol.eval_in(&reflected_bracket_laurent(q));
    Ok(Coeff::pow(&bracket_laurent(q), r).scale(&binomial_rat(n, r)) * tail)
}
