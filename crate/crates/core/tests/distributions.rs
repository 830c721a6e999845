//! Moments from the generating-function route against independent routes.

mod common;

use common::{convolve_moments, pow_usize, reference_moments, truncated_moment};
use qbern::distributions::{grid, mgf_series, moment, moments};
use qbern::exact::{int, rat, Rational};
use qbern::{Distribution, Error};

const MAX_N: usize = 12;

#[test]
fn moments_match_independent_routes() {
    for d in [grid::six_laws(), grid::constant()].concat() {
        assert_eq!(moments(&d, MAX_N).unwrap(), reference_moments(&d, MAX_N), "{d}");
    }
}

#[test]
fn binomial_moments_match_bernoulli_convolution() {
    for d in grid::binomial() {
        let Distribution::Binomial { trials, p1 } = &d else { unreachable!() };
        let single: Vec<Rational> = (0..=MAX_N).map(|n| if n == 0 { int(1) } else { p1.clone() }).collect();
        let conv = (1..*trials).fold(single.clone(), |acc, _| convolve_moments(&acc, &single));
        assert_eq!(moments(&d, MAX_N).unwrap(), conv, "{d}");
    }
}

#[test]
fn geometric_and_negbinomial_moments_bracketed_by_partial_sums() {
    let eps = rat(1, 1_000_000_000);
    for d in [grid::geometric(), grid::negbinomial()].concat() {
        let (a, p1) = match &d {
            Distribution::Geometric { p1 } => (1usize, p1.clone()),
            Distribution::NegBinomial { a, p1 } => (*a as usize, p1.clone()),
            _ => unreachable!(),
        };
        let q = int(1) - &p1;
        // P(Y = y) = C(y-1, a-1) p^a q^(y-a) for y >= a
        let first = pow_usize(&p1, a);
        let next = |y: usize, w: &Rational| w * &q * int(y as i64) / int((y + 1 - a) as i64);
        for n in 0..=MAX_N {
            let exact = moment(&d, n).unwrap();
            let (partial, tail) = truncated_moment(n, a, first.clone(), next, &eps);
            let gap = &exact - &partial;
            assert!(gap >= int(0) && gap <= tail, "{d} n={n}");
        }
    }
}

#[test]
fn closed_form_mgfs_agree_with_powers() {
    const N: usize = 12;
    for p1 in [rat(1, 4), rat(1, 2), rat(3, 4)] {
        let bern = mgf_series(&Distribution::Bernoulli { p1: p1.clone() }, N).unwrap();
        let geom = mgf_series(&Distribution::Geometric { p1: p1.clone() }, N).unwrap();
        for k in 1..=4u32 {
            let binom = mgf_series(&Distribution::Binomial { trials: k, p1: p1.clone() }, N).unwrap();
            assert_eq!(binom, bern.pow(&int(i64::from(k))).unwrap());
            let nb = mgf_series(&Distribution::NegBinomial { a: k, p1: p1.clone() }, N).unwrap();
            assert_eq!(nb, geom.pow(&int(i64::from(k))).unwrap());
        }
    }
}

#[test]
fn custom_moments() {
    let d = Distribution::CustomMoments { moments: vec![int(1), rat(1, 2), rat(1, 3)] };
    assert_eq!(moment(&d, 2).unwrap(), rat(1, 3));
    assert_eq!(moment(&d, 3), Err(Error::InsufficientOrder { needed: 3, order: 2 }));
    assert!(Distribution::CustomMoments { moments: vec![int(2)] }.validate().is_err());
}

#[test]
fn parameter_validation() {
    assert!(Distribution::Poisson { alpha: int(0) }.validate().is_err());
    assert!(Distribution::Bernoulli { p1: rat(3, 2) }.validate().is_err());
    assert!(Distribution::Binomial { trials: 0, p1: rat(1, 2) }.validate().is_err());
    assert!(Distribution::NegBinomial { a: 0, p1: rat(1, 2) }.validate().is_err());
    assert!(Distribution::Geometric { p1: int(1) }.validate().is_ok());
    for d in grid::six_laws() {
        d.validate().unwrap();
    }
}
