//! Independent reference computations for the integration and acceptance
//! tests. Nothing here goes through the series engine.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qbern::exact::{binomial_rat, int, rat, Rational};
use qbern::{Distribution, QPoint};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Stirling numbers of the second kind by enumerating every set partition
/// of `{1..n}`; `table[n][m]`.
pub fn stirling_by_partitions(max_n: usize) -> Vec<Vec<u64>> {
    // place element `i` into one of the `blocks` open blocks or a new one
    fn place(i: usize, n: usize, blocks: usize, row: &mut [u64]) {
        if i == n {
            row[blocks] += 1;
            return;
        }
        for _ in 0..blocks {
            place(i + 1, n, blocks, row);
        }
        place(i + 1, n, blocks + 1, row);
    }
    (0..=max_n)
        .map(|n| {
            let mut row = vec![0u64; max_n + 1];
            place(0, n, 0, &mut row);
            row
        })
        .collect()
}

/// Stirling numbers by the triangle recurrence `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling_by_recurrence(max_n: usize) -> Vec<Vec<Rational>> {
    let mut s = vec![vec![int(0); max_n + 1]; max_n + 1];
    s[0][0] = int(1);
    for n in 1..=max_n {
        for k in 1..=n {
            s[n][k] = int(k as i64) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

/// Touchard polynomials by `T_{n+1}(a) = a sum_k C(n,k) T_k(a)`.
pub fn touchard(a: &Rational, max_n: usize) -> Vec<Rational> {
    let mut t = vec![int(1)];
    for n in 0..max_n {
        let next = (0..=n).fold(int(0), |acc, k| acc + binomial_rat(n, k) * &t[k]) * a;
        t.push(next);
    }
    t
}

/// Geometric moments (support from 1) by conditioning on the first trial:
/// `E[Y^n] = p + (1-p) E[(1+Y)^n]`.
pub fn geometric_moments(p: &Rational, max_n: usize) -> Vec<Rational> {
    let q = int(1) - p;
    let mut m = vec![int(1)];
    for n in 1..=max_n {
        let lower = (0..n).fold(int(0), |acc, k| acc + binomial_rat(n, k) * &m[k]);
        m.push((p + &q * lower) / p);
    }
    m
}

/// Moments of a sum of independent variables from the moments of the summands.
pub fn convolve_moments(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len().min(b.len()))
        .map(|n| (0..=n).fold(int(0), |acc, k| acc + binomial_rat(n, k) * &a[k] * &b[n - k]))
        .collect()
}

pub fn pow_usize(x: &Rational, k: usize) -> Rational {
    (0..k).fold(int(1), |acc, _| acc * x)
}

/// `sum_k C(N,k) p^k (1-p)^(N-k) k^n`.
pub fn binomial_moment_by_pmf(trials: u32, p: &Rational, n: usize) -> Rational {
    let q = int(1) - p;
    let trials = trials as usize;
    (0..=trials).fold(int(0), |acc, k| {
        acc + binomial_rat(trials, k) * pow_usize(p, k) * pow_usize(&q, trials - k) * pow_usize(&int(k as i64), n)
    })
}

/// Partial sum of `sum_{y >= start} y^n w(y)` together with a rigorous bound
/// on the neglected tail, extended until that bound drops below `eps`.
/// `next_weight(y, w(y))` must give `w(y + 1)`, and the ratio of consecutive
/// terms must be non-increasing in `y`.
pub fn truncated_moment(
    n: usize,
    start: usize,
    first_weight: Rational,
    next_weight: impl Fn(usize, &Rational) -> Rational,
    eps: &Rational,
) -> (Rational, Rational) {
    let term = |y: usize, w: &Rational| pow_usize(&int(y as i64), n) * w;
    let mut partial = Rational::zero();
    let (mut y, mut w) = (start, first_weight);
    loop {
        let current = term(y, &w);
        let w_next = next_weight(y, &w);
        let ratio = term(y + 1, &w_next) / &current;
        if ratio < int(1) {
            let tail = &current / (int(1) - ratio);
            if &tail < eps {
                return (partial, tail);
            }
        }
        partial += current;
        y += 1;
        w = w_next;
    }
}

pub fn valuation_int(p: u32, n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    Some(v)
}

/// `p`-adic valuation; `None` for zero.
pub fn valuation(p: u32, x: &Rational) -> Option<i64> {
    let num = valuation_int(p, x.numer())? as i64;
    let den = valuation_int(p, x.denom()).expect("nonzero denominator") as i64;
    Some(num - den)
}

/// An unreduced fraction of big integers. The Riemann sums below have
/// numerators of hundreds of thousands of bits, where gcd reduction would
/// dominate the run time; valuations need no reduction.
#[derive(Clone, Debug)]
pub struct Fraction {
    pub num: BigInt,
    pub den: BigInt,
}

impl Fraction {
    pub fn minus(&self, r: &Rational) -> Fraction {
        Fraction { num: &self.num * r.denom() - r.numer() * &self.den, den: &self.den * r.denom() }
    }

    pub fn valuation(&self, p: u32) -> Option<i64> {
        let num = valuation_int(p, &self.num)? as i64;
        Some(num - valuation_int(p, &self.den).expect("nonzero denominator") as i64)
    }
}

/// Riemann sum `[p^N]_q^-1 sum_{x < p^N} q^(beta x) q^x` of the bosonic
/// integral of `t^beta`, term by term, for an integer `q`.
pub fn bosonic_partial_sum(p: u32, big_n: u32, q: i64, beta: u32) -> Fraction {
    let count = p.pow(big_n);
    let step = BigInt::from(q).pow(beta + 1);
    let mut term = BigInt::one();
    let mut sum = BigInt::zero();
    for _ in 0..count {
        sum += &term;
        term *= &step;
    }
    // [p^N]_q = (q^(p^N) - 1)/(q - 1)
    let bracket_num = BigInt::from(q).pow(count) - 1;
    Fraction { num: sum * (q - 1), den: bracket_num }
}

/// Alternating analogue with weights `(-q)^x`, normalised by `[p^N]_{-q}`.
pub fn fermionic_partial_sum(p: u32, big_n: u32, q: i64, beta: u32) -> Fraction {
    let count = p.pow(big_n);
    let step = -BigInt::from(q).pow(beta + 1);
    let mut term = BigInt::one();
    let mut sum = BigInt::zero();
    for _ in 0..count {
        sum += &term;
        term *= &step;
    }
    // [p^N]_{-q} = (1 - (-q)^(p^N))/(1 + q)
    let bracket_num = BigInt::one() - BigInt::from(-q).pow(count);
    Fraction { num: sum * (q + 1), den: bracket_num }
}

/// Moments of `d` through `max_n` computed without the series engine.
pub fn reference_moments(d: &Distribution, max_n: usize) -> Vec<Rational> {
    match d {
        Distribution::Poisson { alpha } => touchard(alpha, max_n),
        Distribution::Bernoulli { p1 } => (0..=max_n).map(|n| if n == 0 { int(1) } else { p1.clone() }).collect(),
        Distribution::Binomial { trials, p1 } => (0..=max_n).map(|n| binomial_moment_by_pmf(*trials, p1, n)).collect(),
        Distribution::Geometric { p1 } => geometric_moments(p1, max_n),
        Distribution::NegBinomial { a, p1 } => {
            let single = geometric_moments(p1, max_n);
            (1..*a).fold(single.clone(), |acc, _| convolve_moments(&acc, &single))
        }
        Distribution::Uniform01 => (0..=max_n).map(|n| rat(1, n as i64 + 1)).collect(),
        Distribution::Constant { c } => (0..=max_n).map(|n| pow_usize(c, n)).collect(),
        Distribution::CustomMoments { moments } => moments.clone(),
    }
}

/// `p`-adic logarithm `log(1 + u) = sum (-1)^(k+1) u^k / k`, truncated.
pub fn padic_log(u: &Rational, terms: usize) -> Rational {
    (1..=terms).fold(int(0), |acc, k| {
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        acc + sign * pow_usize(u, k) / int(k as i64)
    })
}

/// Fixed deformed points used where the tests need a handful of them.
pub fn sample_points() -> Vec<QPoint> {
    [((2, 3), 1, 2), ((3, 2), -1, 3), ((1, 2), 3, 2), ((5, 4), 2, 3), ((7, 5), 5, 4)]
        .iter()
        .map(|&((a, b), c, d)| QPoint::new(rat(a, b), c, d).unwrap())
        .collect()
}

/// Seeded generator for loops outside proptest.
pub struct Draws(ChaCha8Rng);

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.0.next_u64() % n
    }

    /// Rational with numerator in `[-span, span]` and denominator in `[1, den]`.
    pub fn rational(&mut self, span: i64, den: i64) -> Rational {
        let n = self.below(2 * span as u64 + 1) as i64 - span;
        let d = self.below(den as u64) as i64 + 1;
        rat(n, d)
    }
}
