//! The registered identity cases and their evaluators.
//!
//! Left-hand sides are read off the defining generating function (or an
//! operator applied to it); right-hand sides are assembled from the closed
//! forms. Notation: `X = [x]_q`, `W = [x]_{1/q}`, `Z = [1-x]_q = 1 - W`,
//! `F_r = (vX)^r/r! M^Z`, `M = E[e^(vY)]`, `S_Y` probabilistic Stirling
//! numbers, `(z)_m` falling factorials, `L = ln q`.

use super::{Evaluator, Expectation, IdentityCase, LawPool, Outcome, PointKind, Shape, Trial, Value, Variant};
use crate::distributions::{mgf_series, moments, Distribution};
use crate::error::{Error, Result};
use crate::exact::{
    binomial_rat, factorial_rat, falling_factorial, int, laurent_x_derivation, sign, Coeff, LogExt, Rational,
};
use crate::families::{
    bell_poly, bernstein_classical, frobenius_euler, higher_bernoulli, prob_bernoulli_higher_gf, prob_euler_gf,
    prob_qbernstein, prob_qbernstein_gf, prob_qbernstein_laurent, stirling2, ProbStirlingTable,
};
use crate::padic::{carlitz_beta, fermionic, integrate_corollaries, q_euler, volkenborn};
use crate::series::Series;

fn pw(x: &Rational, k: usize) -> Rational {
    Coeff::pow(x, k)
}

/// `(X, W, Z)` at the trial point.
fn brackets(tr: &Trial) -> (Rational, Rational, Rational) {
    let (w, z) = tr.point.bracket_conjugates();
    (tr.point.bracket(), w, z)
}

fn compared(lhs: Rational, rhs: Rational) -> Result<Outcome> {
    Ok(Outcome::Compared { lhs: Value::Scalar(lhs), rhs: Value::Scalar(rhs) })
}

fn basis(tr: &Trial) -> Result<Rational> {
    prob_qbernstein(&tr.dist, tr.r, tr.n, &tr.point, tr.order)
}

/// `B_{r,j}` for `j = 0..=n`, zero below `r`.
fn basis_row(tr: &Trial, r: usize, n: usize) -> Result<Vec<Rational>> {
    let gf = prob_qbernstein_gf(&tr.dist, r, &tr.point, n)?;
    (0..=n).map(|j| gf.egf_coeff(j)).collect()
}

/// `B_{r,n}` with the conventions `B_{r,n} = 0` for `r < 0` or `r > n`.
fn basis_or_zero(tr: &Trial, r: Option<usize>, n: usize) -> Result<Rational> {
    match r {
        Some(r) if r <= n => prob_qbernstein(&tr.dist, r, n, &tr.point, tr.order),
        _ => Ok(int(0)),
    }
}

/// `F_r` through the trial order; `F_{-1} = 0`.
fn gf(tr: &Trial, r: Option<usize>) -> Result<Series<Rational>> {
    match r {
        Some(r) => prob_qbernstein_gf(&tr.dist, r, &tr.point, tr.order),
        None => Ok(Series::zero(tr.order)),
    }
}

fn derive_times(s: &Series<Rational>, m: usize) -> Series<Rational> {
    (0..m).fold(s.clone(), |acc, _| acc.derive())
}

fn series_value(s: &Series<Rational>) -> Value {
    Value::scalars(s.coeffs().iter().cloned())
}

fn require_deformed(tr: &Trial) -> Result<Rational> {
    if tr.point.is_classical() {
        return Err(Error::ClassicalMode);
    }
    Ok(tr.point.q())
}

fn log_const(c: Rational) -> LogExt {
    LogExt::constant(c)
}

fn self_check(tr: &Trial) -> Result<Outcome> {
    compared(basis(tr)?, basis(tr)?)
}

fn bracket_rules(tr: &Trial) -> Result<Outcome> {
    require_deformed(tr)?;
    let p = &tr.point;
    let (c, rho) = match p {
        crate::qcalc::QPoint::Deformed { c, rho, .. } => (*c, rho.clone()),
        crate::qcalc::QPoint::Classical { .. } => unreachable!(),
    };
    let x = p.bracket();
    let q = p.q();
    let t = p.t();
    let lhs = Value::scalars([
        p.with_numerator(c - tr.c2).bracket(),
        p.with_numerator(-c).bracket(),
        p.inverse_base().bracket(),
        p.reflected().bracket(),
    ]);
    let rhs = Value::scalars([
        &x - crate::exact::rat_pow(&rho, c - tr.c2) * p.with_numerator(tr.c2).bracket(),
        -(&x / &t),
        &q / &t * &x,
        int(1) - p.inverse_base().bracket(),
    ]);
    Ok(Outcome::Compared { lhs, rhs })
}

fn reflected_power(tr: &Trial) -> Result<Outcome> {
    require_deformed(tr)?;
    let (_, form) = tr.point.one_minus_bracket_power(tr.m)?;
    compared(pw(&tr.point.reflected().bracket(), tr.m), form.eval(&tr.point.t()))
}

fn log_mgf(tr: &Trial, with_factorial: bool) -> Result<Outcome> {
    let n = tr.n;
    let lhs = mgf_series(&tr.dist, n + 1)?.log()?.egf_coeff(n + 1)?;
    let st = ProbStirlingTable::new(&tr.dist, n + 1)?;
    let rhs = (0..=n).fold(int(0), |acc, l| {
        let weight = if with_factorial { factorial_rat(l) } else { int(1) };
        acc + sign(l) * weight * st.get(n + 1, l + 1)
    });
    compared(lhs, rhs)
}

fn log_mgf_verbatim(tr: &Trial) -> Result<Outcome> {
    log_mgf(tr, false)
}

fn log_mgf_corrected(tr: &Trial) -> Result<Outcome> {
    log_mgf(tr, true)
}

fn bernoulli_expansion(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, z) = brackets(tr);
    let st = ProbStirlingTable::new(&tr.dist, n)?;
    let beta = prob_bernoulli_higher_gf(&tr.dist, r, &z, n)?;
    let mut rhs = int(0);
    for m in 0..=n {
        rhs += binomial_rat(n, m) * st.get(n - m, r) * beta.egf_coeff(m)?;
    }
    compared(basis(tr)?, rhs * pw(&x, r))
}

fn stirling_expansion(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, w, _) = brackets(tr);
    let st = ProbStirlingTable::new(&tr.dist, n)?;
    let mom = moments(&tr.dist, n)?;
    let neg_w = -w;
    let mut sum = int(0);
    for l in 0..=n - r {
        let inner = (0..=l).fold(int(0), |acc, j| acc + falling_factorial(&neg_w, j) * st.get(l, j));
        sum += binomial_rat(n - r, l) * inner * &mom[n - r - l];
    }
    compared(basis(tr)?, binomial_rat(n, r) * pw(&x, r) * sum)
}

fn inversion(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, w, _) = brackets(tr);
    let moment = moments(&tr.dist, n - r)?.pop().expect("non-empty");
    if Coeff::is_zero(&moment) {
        return Ok(Outcome::Skip(format!("E[Y^{}] = 0", n - r)));
    }
    let st = ProbStirlingTable::new(&tr.dist, n)?;
    let row = basis_row(tr, r, n)?;
    let mut sum = int(0);
    for l in r..=n {
        let weight = (0..=n - l).fold(int(0), |acc, m| acc + st.get(n - l, m) * falling_factorial(&w, m));
        sum += weight * binomial_rat(n, l) * &row[l];
    }
    compared(pw(&x, r), sum / (binomial_rat(n, r) * moment))
}

fn padic_inversion(tr: &Trial) -> Result<Outcome> {
    let q = require_deformed(tr)?;
    let ints = integrate_corollaries(&tr.dist, tr.r, tr.n, &q)?;
    if Coeff::is_zero(&ints.moment) {
        return Ok(Outcome::Skip(format!("E[Y^{}] = 0", tr.n - tr.r)));
    }
    let inv = ints.moment.recip();
    let lhs = Value::Vector(vec![Value::Log(carlitz_beta(tr.r, &q)?), Value::Log(q_euler(tr.r, &q)?)]);
    let rhs = Value::Vector(vec![
        Value::Log(ints.inverse_expansion.0.scale(&inv)),
        Value::Log(ints.inverse_expansion.1.scale(&inv)),
    ]);
    Ok(Outcome::Compared { lhs, rhs })
}

fn appell_convolution(tr: &Trial, family: impl Fn(&Rational) -> Result<Series<Rational>>) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, w, _) = brackets(tr);
    let row = basis_row(tr, r, n)?;
    let at_w = family(&w)?;
    let mut lhs = int(0);
    for j in r..=n {
        lhs += binomial_rat(n, j) * &row[j] * at_w.egf_coeff(n - j)?;
    }
    let rhs = binomial_rat(n, r) * pw(&x, r) * family(&int(1))?.egf_coeff(n - r)?;
    compared(lhs, rhs)
}

fn euler_convolution(tr: &Trial) -> Result<Outcome> {
    appell_convolution(tr, |z| prob_euler_gf(&tr.dist, z, tr.n))
}

fn bernoulli_convolution(tr: &Trial) -> Result<Outcome> {
    appell_convolution(tr, |z| prob_bernoulli_higher_gf(&tr.dist, 1, z, tr.n))
}

fn recurrence_verbatim(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, z) = brackets(tr);
    let mean = moments(&tr.dist, 1)?.pop().expect("non-empty");
    let rhs = &x * basis_or_zero(tr, r.checked_sub(1), n - 1)? + z * mean * basis_or_zero(tr, Some(r), n - 1)?;
    compared(basis(tr)?, rhs)
}

fn recurrence_series(tr: &Trial) -> Result<Outcome> {
    let order = tr.order;
    let (x, _, z) = brackets(tr);
    let f = gf(tr, Some(tr.r))?;
    let below = gf(tr, tr.r.checked_sub(1))?.truncate(order - 1);
    let mgf = mgf_series(&tr.dist, order)?;
    let log_derivative = mgf.derive().mul(&mgf.truncate(order - 1).recip()?)?;
    let rhs = below.mul_scalar(&x).add(&f.truncate(order - 1).mul(&log_derivative)?.mul_scalar(&z))?;
    Ok(Outcome::Compared { lhs: series_value(&f.derive()), rhs: series_value(&rhs) })
}

fn x_derivative(tr: &Trial, with_factorial: bool) -> Result<Outcome> {
    let q = require_deformed(tr)?;
    let (n, r) = (tr.n, tr.r);
    if n == 0 {
        return Ok(Outcome::Skip("n = 0 leaves no B_{r-1,n-1}".into()));
    }
    let t = tr.point.t();
    let lhs = laurent_x_derivation(&prob_qbernstein_laurent(&tr.dist, r, n, &q)?).eval(&t);
    let st = ProbStirlingTable::new(&tr.dist, n)?;
    let row = basis_row(tr, r, n)?;
    let first = int(n as i64) * &t / (&q - int(1)) * basis_or_zero(tr, r.checked_sub(1), n - 1)?;
    let mut sum = int(0);
    for j in 0..n {
        for l in 0..n - j {
            let weight = if with_factorial { factorial_rat(l) } else { int(1) };
            sum += binomial_rat(n, j) * &row[j] * sign(l) * weight * st.get(n - j, l + 1);
        }
    }
    let second = &q / &t / (int(1) - &q) * sum;
    let rhs = LogExt::log_power(first + second, 1);
    Ok(Outcome::Compared { lhs: Value::Log(lhs), rhs: Value::Log(rhs) })
}

fn x_derivative_verbatim(tr: &Trial) -> Result<Outcome> {
    x_derivative(tr, false)
}

fn x_derivative_corrected(tr: &Trial) -> Result<Outcome> {
    x_derivative(tr, true)
}

fn higher_derivative(tr: &Trial, corrected: bool) -> Result<Outcome> {
    let (m, r, order) = (tr.m, tr.r, tr.order);
    if m > order {
        return Ok(Outcome::Skip(format!("m = {m} exceeds order {order}")));
    }
    let target = order - m;
    let (x, _, z) = brackets(tr);
    let lhs = derive_times(&gf(tr, Some(r))?, m);
    let mom = moments(&tr.dist, m)?;
    let mut rhs = Series::zero(target);
    let powered = if corrected { Some(mgf_series(&tr.dist, order)?.pow(&z)?) } else { None };
    for l in 0..=m.min(r) {
        let term = match &powered {
            Some(mz) => {
                let front = Series::monomial(pw(&x, r - l) / factorial_rat(r - l), r - l, target);
                front.mul(&derive_times(mz, m - l).truncate(target))?
            }
            None => {
                let weight = falling_factorial(&int(r as i64), l) / factorial_rat(r) * factorial_rat(r - l);
                gf(tr, Some(r - l))?.truncate(target).mul_scalar(&(weight * &mom[m - l] * pw(&z, m - l)))
            }
        };
        rhs = rhs.add(&term.mul_scalar(&(binomial_rat(m, l) * pw(&x, l))))?;
    }
    Ok(Outcome::Compared { lhs: series_value(&lhs), rhs: series_value(&rhs) })
}

fn higher_derivative_verbatim(tr: &Trial) -> Result<Outcome> {
    higher_derivative(tr, false)
}

fn higher_derivative_corrected(tr: &Trial) -> Result<Outcome> {
    higher_derivative(tr, true)
}

fn poisson_rate(tr: &Trial) -> Result<Rational> {
    match &tr.dist {
        Distribution::Poisson { alpha } => Ok(alpha.clone()),
        other => Err(Error::InvalidParameter(format!("{other} is not Poisson"))),
    }
}

fn poisson_bell(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, z) = brackets(tr);
    let alpha = poisson_rate(tr)?;
    compared(basis(tr)?, binomial_rat(n, r) * pw(&x, r) * bell_poly(n - r, &(alpha * z)))
}

fn poisson_stirling(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, z) = brackets(tr);
    let alpha = poisson_rate(tr)?;
    let sum = (0..=n - r).fold(int(0), |acc, m| acc + pw(&alpha, m) * pw(&z, m) * stirling2(n - r, m));
    compared(basis(tr)?, binomial_rat(n, r) * pw(&x, r) * sum)
}

/// `sum_m sum_l (-1)^l a^m S(n-r,m) C(n,r) C(m,l)` times `term(m, l)`.
fn poisson_double_sum(tr: &Trial, mut term: impl FnMut(usize, usize) -> Result<LogExt>) -> Result<LogExt> {
    let (n, r) = (tr.n, tr.r);
    let alpha = poisson_rate(tr)?;
    let mut total = LogExt::zero();
    for m in 0..=n - r {
        for l in 0..=m {
            let w = sign(l) * pw(&alpha, m) * stirling2(n - r, m) * binomial_rat(n, r) * binomial_rat(m, l);
            total = total + term(m, l)?.scale(&w);
        }
    }
    Ok(total)
}

fn poisson_laurent(tr: &Trial) -> Result<Outcome> {
    require_deformed(tr)?;
    let (x, _, _) = brackets(tr);
    let t = tr.point.t();
    let rhs = poisson_double_sum(tr, |m, l| {
        Ok(log_const(crate::exact::rat_pow(&t, -(m as i64)) * pw(&x, tr.r + l)))
    })?;
    compared(basis(tr)?, rhs.coeff(0))
}

fn poisson_volkenborn(tr: &Trial) -> Result<Outcome> {
    let q = require_deformed(tr)?;
    let r = tr.r;
    let lhs = volkenborn(&prob_qbernstein_laurent(&tr.dist, r, tr.n, &q)?, &q)?;
    let one_minus_q = int(1) - &q;
    let rhs = poisson_double_sum(tr, |m, l| {
        let mut inner = LogExt::zero();
        for j in 0..=l + r {
            let k = j as i64 - m as i64;
            let ratio = if k == 0 {
                LogExt::log_power(&q - int(1), -1)
            } else {
                let qk = crate::exact::rat_pow(&q, k);
                log_const(int(k) * (&q - int(1)) / (qk - int(1)))
            };
            inner = inner + ratio.scale(&(sign(l + j + 1) * binomial_rat(l + r, j)));
        }
        Ok(inner.scale(&crate::exact::rat_pow(&one_minus_q, -(l as i64))))
    })?;
    let front = LogExt::log_power(crate::exact::rat_pow(&one_minus_q, -(r as i64 + 1)), 1);
    Ok(Outcome::Compared { lhs: Value::Log(lhs), rhs: Value::Log(front * rhs) })
}

fn poisson_fermionic(tr: &Trial) -> Result<Outcome> {
    let q = require_deformed(tr)?;
    let r = tr.r;
    let lhs = fermionic(&prob_qbernstein_laurent(&tr.dist, r, tr.n, &q)?, &q)?;
    let one_minus_q = int(1) - &q;
    let rhs = poisson_double_sum(tr, |m, l| {
        let mut inner = int(0);
        for j in 0..=l + r {
            let qk = crate::exact::rat_pow(&q, j as i64 - m as i64);
            inner += sign(l + j) * binomial_rat(l + r, j) / (int(1) + qk);
        }
        Ok(log_const(inner * crate::exact::rat_pow(&one_minus_q, -(l as i64))))
    })?;
    let front = int(2) * crate::exact::rat_pow(&one_minus_q, -(r as i64));
    Ok(Outcome::Compared { lhs: Value::Log(lhs), rhs: Value::Log(rhs.scale(&front)) })
}

/// `X^r C(n,r) sum_m p^m (s)_m S(n-r, m)`.
fn falling_stirling(tr: &Trial, p: &Rational, s: &Rational) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, _) = brackets(tr);
    let sum = (0..=n - r).fold(int(0), |acc, m| acc + pw(p, m) * falling_factorial(s, m) * stirling2(n - r, m));
    compared(basis(tr)?, pw(&x, r) * binomial_rat(n, r) * sum)
}

fn bernoulli_law(tr: &Trial) -> Result<Outcome> {
    let (_, _, z) = brackets(tr);
    match &tr.dist {
        Distribution::Bernoulli { p1 } => falling_stirling(tr, p1, &z),
        other => Err(Error::InvalidParameter(format!("{other} is not Bernoulli"))),
    }
}

fn binomial_law(tr: &Trial) -> Result<Outcome> {
    let (_, _, z) = brackets(tr);
    match &tr.dist {
        Distribution::Binomial { trials, p1 } => falling_stirling(tr, p1, &(int(i64::from(*trials)) * z)),
        other => Err(Error::InvalidParameter(format!("{other} is not binomial"))),
    }
}

fn geometric_law(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, z) = brackets(tr);
    let Distribution::Geometric { p1 } = &tr.dist else {
        return Err(Error::InvalidParameter(format!("{} is not geometric", tr.dist)));
    };
    let q1 = int(1) - p1;
    let rhs = pw(&x, r) * binomial_rat(n, r) * frobenius_euler(n - r, &z, &int(0), &q1)?;
    compared(sign(n - r) * basis(tr)?, rhs)
}

fn negbinomial_parts(tr: &Trial) -> Result<(Rational, Rational)> {
    match &tr.dist {
        Distribution::NegBinomial { a, p1 } => Ok((int(i64::from(*a)), (int(1) - p1).recip())),
        other => Err(Error::InvalidParameter(format!("{other} is not negative binomial"))),
    }
}

fn negbinomial_verbatim(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (_, _, z) = brackets(tr);
    let (a, u) = negbinomial_parts(tr)?;
    let power = &a * z;
    let x = tr.point.x();
    let mut rhs = int(0);
    for l in r..=n {
        let classical = bernstein_classical(r, l, &x)?;
        rhs += binomial_rat(n, l) * pw(&a, n - l) * classical * frobenius_euler(n - l, &power, &int(0), &u)?;
    }
    compared(basis(tr)?, rhs)
}

fn negbinomial_derived(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, _, z) = brackets(tr);
    let (a, u) = negbinomial_parts(tr)?;
    let power = a * z;
    let mut sum = int(0);
    for k in 0..=n - r {
        sum += binomial_rat(n - r, k) * pw(&power, k) * frobenius_euler(n - r - k, &power, &int(0), &u)?;
    }
    compared(basis(tr)?, binomial_rat(n, r) * pw(&x, r) * sum)
}

fn uniform_law(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let (x, w, _) = brackets(tr);
    let rhs = binomial_rat(n, r) * pw(&x, r) * higher_bernoulli(n - r, &(w - int(1)), &int(0));
    compared(basis(tr)?, rhs)
}

fn classical_limit(tr: &Trial) -> Result<Outcome> {
    let (n, r) = (tr.n, tr.r);
    let x = tr.point.x();
    let st = ProbStirlingTable::new(&tr.dist, n)?;
    let rest = int(1) - &x;
    let sum = (0..=n - r).fold(int(0), |acc, m| acc + falling_factorial(&rest, m) * st.get(n - r, m));
    compared(basis(tr)?, binomial_rat(n, r) * pw(&x, r) * sum)
}

fn classical_bernstein(tr: &Trial) -> Result<Outcome> {
    compared(basis(tr)?, bernstein_classical(tr.r, tr.n, &tr.point.x())?)
}

struct CaseDef {
    id: &'static str,
    variant: Variant,
    expectation: Expectation,
    laws: LawPool,
    point: PointKind,
    shape: Shape,
    statement: &'static str,
    notes: &'static str,
    eval: Option<Evaluator>,
}

impl From<CaseDef> for IdentityCase {
    fn from(s: CaseDef) -> Self {
        IdentityCase {
            id: s.id,
            variant: s.variant,
            expectation: s.expectation,
            laws: s.laws,
            point: s.point,
            shape: s.shape,
            statement: s.statement,
            notes: s.notes,
            eval: s.eval,
        }
    }
}

const LAURENT_CAP: usize = 6;

const fn capped(n_cap: usize) -> Shape {
    Shape { n_cap, ..Shape::RN }
}

const DERIVATIVE: Shape = Shape { n_min: 1, ..capped(LAURENT_CAP) };

fn case(
    id: &'static str,
    variant: Variant,
    expectation: Expectation,
    laws: LawPool,
    statement: &'static str,
    eval: Evaluator,
) -> CaseDef {
    CaseDef {
        id,
        variant,
        expectation,
        laws,
        point: PointKind::Deformed,
        shape: Shape::RN,
        statement,
        notes: "",
        eval: Some(eval),
    }
}

/// Every registered case, in report order.
pub fn registry() -> Vec<IdentityCase> {
    use Expectation::{NonExecutable, Pass, Record};
    use Variant::{Corrected, Verbatim};

    let defs = vec![
        case("SELF", Verbatim, Pass, LawPool::Any, "B_{r,n} = B_{r,n} (harness check: both sides share one evaluator)", self_check),
        CaseDef {
            shape: Shape { uses: &["c2"], ..Shape::RN },
            ..case(
                "P-BRKT",
                Verbatim,
                Pass,
                LawPool::ConstantOne,
                "[u-w]_q = [u]_q - q^(u-w) [w]_q; [-x]_q = -q^-x [x]_q; [x]_{1/q} = q^(1-x) [x]_q; [1-x]_q = 1 - [x]_{1/q}",
                bracket_rules,
            )
        },
        CaseDef {
            shape: Shape { m_max: 10, uses: &["m"], ..Shape::RN },
            ..case(
                "P-110",
                Verbatim,
                Pass,
                LawPool::ConstantOne,
                "[1-x]_q^m = t^-m sum_l C(m,l) (-1)^l [x]_q^l",
                reflected_power,
            )
        },
        CaseDef {
            shape: Shape { n_slack: 1, uses: &["n"], ..Shape::RN },
            notes: "printed sum omits l!; fails already for Y = 1, n = 2",
            ..case(
                "P-LOG",
                Verbatim,
                Record,
                LawPool::Any,
                "[v^(n+1)/(n+1)!] log M = sum_{l=0}^{n} (-1)^l S_Y(n+1, l+1)",
                log_mgf_verbatim,
            )
        },
        CaseDef {
            shape: Shape { n_slack: 1, uses: &["n"], ..Shape::RN },
            notes: "inserts l!, from log(1 + u) = sum (-1)^l u^(l+1)/(l+1)",
            ..case(
                "P-LOG",
                Corrected,
                Pass,
                LawPool::Any,
                "[v^(n+1)/(n+1)!] log M = sum_{l=0}^{n} (-1)^l l! S_Y(n+1, l+1)",
                log_mgf_corrected,
            )
        },
        case(
            "T2.1",
            Verbatim,
            Pass,
            LawPool::Any,
            "B_{r,n} = sum_m C(n,m) S_Y(n-m, r) beta^(r)_{m,Y}(Z) X^r",
            bernoulli_expansion,
        ),
        CaseDef {
            notes: "the inner summation index reuses r, so the printed right-hand side has no single reading",
            eval: None,
            ..case("T2.2", Verbatim, NonExecutable, LawPool::Any, "B_{r,n} as a Stirling double sum", self_check)
        },
        CaseDef {
            notes: "summation indices renamed so r stays the basis index",
            ..case(
                "T2.2",
                Corrected,
                Pass,
                LawPool::Any,
                "B_{r,n} = C(n,r) X^r sum_{l=0}^{n-r} C(n-r,l) sum_{j<=l} (-W)_j S_Y(l,j) E[Y^(n-r-l)]",
                stirling_expansion,
            )
        },
        CaseDef {
            notes: "outer sum runs over l >= r, since B_{r,l} = 0 for l < r; normalised by C(n,r)",
            ..case(
                "T2.3",
                Corrected,
                Pass,
                LawPool::Any,
                "X^r = E[Y^(n-r)]^-1 sum_{l=r}^{n} sum_{m=0}^{n-l} S_Y(n-l,m) C(n,l)/C(n,r) (W)_m B_{r,l}",
                inversion,
            )
        },
        CaseDef {
            shape: capped(LAURENT_CAP),
            notes: "right-hand side lacks the 1/C(n,r) normaliser, so it matches only for r = 0 or r = n",
            ..case(
                "C2.1",
                Verbatim,
                Record,
                LawPool::Any,
                "(beta_{r,q}, E_{r,q}) = E[Y^(n-r)]^-1 (I_q, I_{-q}) of sum_{l,m} S_Y(n-l,m) C(n,l) (W)_m B_{r,l}",
                padic_inversion,
            )
        },
        case(
            "T2.4",
            Verbatim,
            Pass,
            LawPool::Any,
            "sum_j C(n,j) B_{r,j} E^Y_{n-j}(W) = C(n,r) X^r E^Y_{n-r}(1)",
            euler_convolution,
        ),
        case(
            "T2.5",
            Verbatim,
            Pass,
            LawPool::Any,
            "sum_j C(n,j) B_{r,j} beta^Y_{n-j}(W) = C(n,r) X^r beta^Y_{n-r}(1)",
            bernoulli_convolution,
        ),
        CaseDef {
            shape: Shape { n_min: 1, ..Shape::RN },
            ..case(
                "T2.6",
                Verbatim,
                Pass,
                LawPool::Constant,
                "B_{r,n} = X B_{r-1,n-1} + Z E[Y] B_{r,n-1}",
                recurrence_verbatim,
            )
        },
        CaseDef {
            shape: Shape { n_min: 1, ..Shape::RN },
            notes: "holds only when log M is linear in v, that is for constant Y",
            ..case(
                "T2.6",
                Verbatim,
                Record,
                LawPool::NonConstant,
                "B_{r,n} = X B_{r-1,n-1} + Z E[Y] B_{r,n-1}",
                recurrence_verbatim,
            )
        },
        CaseDef {
            shape: Shape { uses: &["r"], ..Shape::RN },
            notes: "E[Y] replaced by the series M'/M; compared through order N-1",
            ..case(
                "T2.6",
                Corrected,
                Pass,
                LawPool::Any,
                "d/dv F_r = X F_{r-1} + Z F_r M'/M",
                recurrence_series,
            )
        },
        CaseDef {
            shape: DERIVATIVE,
            notes: "printed inner sum omits l!",
            ..case(
                "T2.7",
                Verbatim,
                Record,
                LawPool::Any,
                "d/dx B_{r,n} = n t L/(q-1) B_{r-1,n-1} + (q/t) L/(1-q) sum_j sum_l C(n,j) B_{r,j} (-1)^l S_Y(n-j,l+1)",
                x_derivative_verbatim,
            )
        },
        CaseDef {
            shape: DERIVATIVE,
            notes: "inserts l!; the left-hand side differentiates the t-Laurent form with t^b -> b L t^b",
            ..case(
                "T2.7",
                Corrected,
                Record,
                LawPool::Any,
                "d/dx B_{r,n} = n t L/(q-1) B_{r-1,n-1} + (q/t) L/(1-q) sum_j sum_l C(n,j) B_{r,j} (-1)^l l! S_Y(n-j,l+1)",
                x_derivative_corrected,
            )
        },
        CaseDef {
            shape: Shape { m_max: 4, uses: &["r", "m"], ..Shape::RN },
            ..case(
                "T2.8",
                Verbatim,
                Pass,
                LawPool::Constant,
                "d^m/dv^m F_r = sum_l C(m,l) X^l (r)_l/r! (r-l)! E[Y^(m-l)] Z^(m-l) F_{r-l}",
                higher_derivative_verbatim,
            )
        },
        CaseDef {
            shape: Shape { m_max: 4, uses: &["r", "m"], ..Shape::RN },
            notes: "E[Y^k] Z^k M^Z stands in for d^k/dv^k M^Z, which is exact only for constant Y",
            ..case(
                "T2.8",
                Verbatim,
                Record,
                LawPool::NonConstant,
                "d^m/dv^m F_r = sum_l C(m,l) X^l (r)_l/r! (r-l)! E[Y^(m-l)] Z^(m-l) F_{r-l}",
                higher_derivative_verbatim,
            )
        },
        CaseDef {
            shape: Shape { m_max: 4, uses: &["r", "m"], ..Shape::RN },
            notes: "Leibniz rule with the exact derivatives of M^Z",
            ..case(
                "T2.8",
                Corrected,
                Pass,
                LawPool::Any,
                "d^m/dv^m F_r = sum_l C(m,l) X^l (vX)^(r-l)/(r-l)! d^(m-l)/dv^(m-l) M^Z",
                higher_derivative_corrected,
            )
        },
        case("T3.1", Verbatim, Pass, LawPool::Poisson, "B_{r,n} = C(n,r) X^r phi_{n-r}(alpha Z)", poisson_bell),
        CaseDef {
            notes: "Stirling numbers indexed by n-r",
            ..case(
                "T3.2",
                Corrected,
                Pass,
                LawPool::Poisson,
                "B_{r,n} = sum_m C(n,r) alpha^m X^r Z^m S(n-r,m)",
                poisson_stirling,
            )
        },
        case(
            "C3.1",
            Verbatim,
            Pass,
            LawPool::Poisson,
            "B_{r,n} = sum_m sum_l (-1)^l alpha^m S(n-r,m) C(n,r) C(m,l) t^-m X^(r+l)",
            poisson_laurent,
        ),
        CaseDef {
            shape: capped(LAURENT_CAP),
            notes: "the j = m term k/[k]_q is read as its limit (q-1)/L",
            ..case(
                "C3.2",
                Verbatim,
                Record,
                LawPool::Poisson,
                "I_q(B_{r,n}) = L/(1-q)^(r+1) sum_{m,l} (1-q)^-l sum_j (-1)^(l+j-1) alpha^m S(n-r,m) C(n,r) C(m,l) C(l+r,j) (j-m)/[j-m]_q",
                poisson_volkenborn,
            )
        },
        CaseDef {
            shape: capped(LAURENT_CAP),
            ..case(
                "C3.3",
                Verbatim,
                Record,
                LawPool::Poisson,
                "I_{-q}(B_{r,n}) = 2/(1-q)^r sum_{m,l} (1-q)^-l sum_j (-1)^(l+j) alpha^m S(n-r,m) C(n,r) C(m,l) C(l+r,j)/(1+q^(j-m))",
                poisson_fermionic,
            )
        },
        case(
            "T3.3",
            Verbatim,
            Pass,
            LawPool::Bernoulli,
            "B_{r,n} = X^r C(n,r) sum_m p^m (Z)_m S(n-r,m)",
            bernoulli_law,
        ),
        CaseDef {
            notes: "falling factorial of nbar Z instead of Z",
            ..case(
                "T3.4",
                Corrected,
                Pass,
                LawPool::Binomial,
                "B_{r,n} = X^r C(n,r) sum_m p^m (nbar Z)_m S(n-r,m)",
                binomial_law,
            )
        },
        case(
            "T3.5",
            Verbatim,
            Pass,
            LawPool::Geometric,
            "(-1)^(n-r) B_{r,n} = X^r C(n,r) H^(Z)_{n-r}(0 | 1-p)",
            geometric_law,
        ),
        CaseDef {
            notes: "mixes the classical basis at x with the deformed bracket Z",
            ..case(
                "T3.6",
                Verbatim,
                Record,
                LawPool::NegBinomial,
                "B_{r,n} = sum_l C(n,l) a^(n-l) B_{r,l}(x) H^(aZ)_{n-l}(0 | 1/(1-p))",
                negbinomial_verbatim,
            )
        },
        CaseDef {
            notes: "derived from M^Z = e^(aZv) (p/(1-(1-p)e^v))^(aZ)",
            ..case(
                "T3.6",
                Corrected,
                Pass,
                LawPool::NegBinomial,
                "B_{r,n} = C(n,r) X^r sum_k C(n-r,k) (aZ)^k H^(aZ)_{n-r-k}(0 | 1/(1-p))",
                negbinomial_derived,
            )
        },
        case(
            "T3.7",
            Verbatim,
            Pass,
            LawPool::Uniform,
            "B_{r,n} = C(n,r) X^r B^(W-1)_{n-r}(0)",
            uniform_law,
        ),
        CaseDef {
            point: PointKind::Classical,
            ..case(
                "R2.1",
                Verbatim,
                Pass,
                LawPool::Any,
                "q = 1: B_{r,n}(x) = C(n,r) x^r sum_m (1-x)_m S_Y(n-r,m)",
                classical_limit,
            )
        },
        CaseDef {
            point: PointKind::Classical,
            ..case(
                "R2.2",
                Verbatim,
                Pass,
                LawPool::ConstantOne,
                "q = 1, Y = 1: B_{r,n}(x) = C(n,r) x^r (1-x)^(n-r)",
                classical_bernstein,
            )
        },
    ];
    defs.into_iter().map(IdentityCase::from).collect()
}
