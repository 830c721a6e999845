//! q-bracket calculus at exact evaluation points.
//!
//! A deformed point is built from `(rho, c, d)` with `q = rho^d`,
//! `t = q^x = rho^c` and `x = c/d`, so `q`, `t` and `x` are rational at the
//! same time. The classical point carries `q = 1` and replaces every bracket
//! by its limit `[x]_q -> x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{binomial_rat, fmt_rational, int, is_positive, rat_pow, sign, Coeff, LaurentT, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QPoint {
    Deformed { rho: Rational, c: i64, d: u32 },
    Classical { x: Rational },
}

impl QPoint {
    pub fn new(rho: Rational, c: i64, d: u32) -> Result<Self> {
        if !is_positive(&rho) || rho.is_one() {
            return Err(Error::InvalidParameter(format!(
                "rho must be positive and different from 1, got {}",
                fmt_rational(&rho)
            )));
        }
        if d == 0 {
            return Err(Error::InvalidParameter("d must be positive".into()));
        }
        Ok(QPoint::Deformed { rho, c, d })
    }

    pub fn classical(x: Rational) -> Self {
        QPoint::Classical { x }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, QPoint::Classical { .. })
    }

    pub fn q(&self) -> Rational {
        match self {
            QPoint::Deformed { rho, d, .. } => rat_pow(rho, i64::from(*d)),
            QPoint::Classical { .. } => int(1),
        }
    }

    /// `q^x`; equal to 1 in classical mode.
    pub fn t(&self) -> Rational {
        match self {
            QPoint::Deformed { rho, c, .. } => rat_pow(rho, *c),
            QPoint::Classical { .. } => int(1),
        }
    }

    pub fn x(&self) -> Rational {
        match self {
            QPoint::Deformed { c, d, .. } => Rational::new((*c).into(), (*d).into()),
            QPoint::Classical { x } => x.clone(),
        }
    }

    /// The same base with `x` replaced by `c'/d`.
    pub fn with_numerator(&self, c_new: i64) -> Self {
        match self {
            QPoint::Deformed { rho, d, .. } => QPoint::Deformed { rho: rho.clone(), c: c_new, d: *d },
            QPoint::Classical { .. } => self.clone(),
        }
    }

    /// The point with `q` replaced by `1/q` and the same `x`.
    pub fn inverse_base(&self) -> Self {
        match self {
            QPoint::Deformed { rho, c, d } => QPoint::Deformed { rho: rho.recip(), c: *c, d: *d },
            QPoint::Classical { .. } => self.clone(),
        }
    }

    /// The point `1 - x` on the same grid.
    pub fn reflected(&self) -> Self {
        match self {
            QPoint::Deformed { rho, c, d } => QPoint::Deformed { rho: rho.clone(), c: i64::from(*d) - c, d: *d },
            QPoint::Classical { x } => QPoint::Classical { x: int(1) - x },
        }
    }

    /// `[x]_q = (q^x - 1)/(q - 1)`, or `x` in classical mode.
    pub fn bracket(&self) -> Rational {
        match self {
            QPoint::Deformed { .. } => (self.t() - int(1)) / (self.q() - int(1)),
            QPoint::Classical { x } => x.clone(),
        }
    }

    /// `([x]_{1/q}, [1 - x]_q)`.
    pub fn bracket_conjugates(&self) -> (Rational, Rational) {
        match self {
            QPoint::Deformed { .. } => {
                let (q, t) = (self.q(), self.t());
                let inv = &q * (int(1) - &t) / (&t * (int(1) - &q));
                let refl = int(1) - &inv;
                (inv, refl)
            }
            QPoint::Classical { x } => (x.clone(), int(1) - x),
        }
    }

    /// `[1 - x]_q^m` as a scalar together with its Laurent form
    /// `t^-m sum_l C(m,l) (-1)^l ((t - 1)/(q - 1))^l`.
    pub fn one_minus_bracket_power(&self, m: usize) -> Result<(Rational, LaurentT)> {
        if self.is_classical() {
            return Err(Error::ClassicalMode);
        }
        let (_, refl) = self.bracket_conjugates();
        let scalar = Coeff::pow(&refl, m);
        let xb = bracket_laurent(&self.q());
        let sum = (0..=m).fold(LaurentT::zero(), |acc, l| {
            acc + Coeff::pow(&xb, l).scale(&(binomial_rat(m, l) * sign(l)))
        });
        let form = LaurentT::monomial(int(1), -(m as i64)) * sum;
        Ok((scalar, form))
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPoint::Deformed { rho, c, d } => write!(f, "rho={} c={} d={}", fmt_rational(rho), c, d),
            QPoint::Classical { x } => write!(f, "q=1 x={}", fmt_rational(x)),
        }
    }
}

/// `[x]_q = (t - 1)/(q - 1)` as a Laurent polynomial in `t`.
pub fn bracket_laurent(q: &Rational) -> LaurentT {
    let k = (q - int(1)).recip();
    LaurentT::from_terms([(1, k.clone()), (0, -k)])
}

/// `[x]_{1/q} = q (1 - t^-1)/(q - 1)` as a Laurent polynomial in `t`.
pub fn inverse_bracket_laurent(q: &Rational) -> LaurentT {
    let k = q / (q - int(1));
    LaurentT::from_terms([(0, k.clone()), (-1, -k)])
}

/// `[1 - x]_q = (q t^-1 - 1)/(q - 1)` as a Laurent polynomial in `t`.
pub fn reflected_bracket_laurent(q: &Rational) -> LaurentT {
    let k = (q - int(1)).recip();
    LaurentT::from_terms([(-1, q * &k), (0, -k)])
}

pub(crate) fn check_q(q: &Rational) -> Result<()> {
    if !is_positive(q) || q.is_one() {
        return Err(Error::InvalidParameter(format!("q must be positive and != 1, got {}", fmt_rational(q))));
    }
    Ok(())
}
