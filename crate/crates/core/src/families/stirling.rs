use crate::distributions::{mgf_series, Distribution};
use crate::error::Result;
use crate::exact::{factorial_rat, int, Coeff, Rational};
use crate::series::Series;

/// Probabilistic Stirling numbers `S_Y(n, m)` for all `n, m <= max`, from
/// the generating functions `(M - 1)^m / m!`.
#[derive(Clone, Debug)]
pub struct ProbStirlingTable {
    rows: Vec<Vec<Rational>>,
}

impl ProbStirlingTable {
    pub fn new(d: &Distribution, max: usize) -> Result<Self> {
        let m1 = mgf_series(d, max)?.sub(&Series::one(max))?;
        let mut rows = vec![vec![int(0); max + 1]; max + 1];
        let mut power = Series::one(max);
        for m in 0..=max {
            let inv = factorial_rat(m).recip();
            for (n, row) in rows.iter_mut().enumerate() {
                row[m] = power.egf_coeff(n)? * &inv;
            }
            power = power.mul(&m1)?;
        }
        Ok(ProbStirlingTable { rows })
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S_Y(n, m)`; zero outside the table's triangle.
    pub fn get(&self, n: usize, m: usize) -> Rational {
        self.rows.get(n).and_then(|row| row.get(m)).cloned().unwrap_or_else(<Rational as Coeff>::zero)
    }
}

/// `S_Y(n, m)`, the `v^n/n!` coefficient of `(E[e^(vY)] - 1)^m / m!`.
pub fn prob_stirling2(d: &Distribution, n: usize, m: usize) -> Result<Rational> {
    let m1 = mgf_series(d, n)?.sub(&Series::one(n))?;
    Ok(m1.pow_int(m)?.egf_coeff(n)? / factorial_rat(m))
}

/// Stirling numbers of the second kind, `m! S(n, m) = [v^n/n!] (e^v - 1)^m`.
pub fn stirling2(n: usize, m: usize) -> Rational {
    let em1 = Series::exponential(&int(1), n).sub(&Series::one(n)).expect("same order");
    let power = em1.pow_int(m).expect("same order");
    power.egf_coeff(n).expect("within order") / factorial_rat(m)
}
