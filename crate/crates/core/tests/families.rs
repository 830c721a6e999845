//! Special-number families against enumeration, recurrences and tabulated
//! values, and the Bernstein bases against their closed forms.

mod common;

use common::{sample_points, stirling_by_partitions, stirling_by_recurrence, touchard};
use qbern::distributions::{grid, mgf_series};
use qbern::exact::{binomial_rat, int, rat, Coeff, Rational};
use qbern::families::*;
use qbern::{Distribution, QPoint, Series};

fn pw(x: &Rational, k: usize) -> Rational {
    Coeff::pow(x, k)
}

#[test]
fn stirling_matches_enumeration_and_recurrence() {
    let counted = stirling_by_partitions(8);
    for n in 0..=8 {
        for m in 0..=8 {
            assert_eq!(stirling2(n, m), int(counted[n][m] as i64), "S({n},{m})");
        }
    }
    let rec = stirling_by_recurrence(12);
    for n in 0..=12 {
        for m in 0..=12 {
            assert_eq!(stirling2(n, m), rec[n][m]);
        }
    }
}

#[test]
fn probabilistic_stirling_reduces_and_is_triangular() {
    let one = Distribution::Constant { c: int(1) };
    let table = ProbStirlingTable::new(&one, 12).unwrap();
    for n in 0..=12 {
        for m in 0..=12 {
            assert_eq!(table.get(n, m), stirling2(n, m));
            assert_eq!(prob_stirling2(&one, n, m).unwrap(), stirling2(n, m));
        }
    }
    for d in grid::six_laws() {
        let table = ProbStirlingTable::new(&d, 8).unwrap();
        for n in 0..8 {
            for m in n + 1..=8 {
                assert!(Coeff::is_zero(&table.get(n, m)), "{d} S_Y({n},{m})");
            }
            assert_eq!(table.get(n, n), Coeff::pow(&mgf_series(&d, 1).unwrap().coeff(1), n), "{d} diagonal");
        }
        assert_eq!(table.get(5, 2), prob_stirling2(&d, 5, 2).unwrap());
    }
}

#[test]
fn bell_polynomials_follow_touchard() {
    for a in [rat(1, 2), rat(2, 3), int(1), rat(-3, 4)] {
        let reference = touchard(&a, 10);
        for (n, value) in reference.iter().enumerate() {
            assert_eq!(&bell_poly(n, &a), value);
        }
    }
    let bell_numbers = [1, 1, 2, 5, 15, 52, 203, 877];
    for (n, b) in bell_numbers.iter().enumerate() {
        assert_eq!(bell_poly(n, &int(1)), int(*b));
    }
}

#[test]
fn bernoulli_and_euler_numbers() {
    let bernoulli = [int(1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30), int(0), rat(1, 42)];
    for (n, b) in bernoulli.iter().enumerate() {
        assert_eq!(&higher_bernoulli(n, &int(1), &int(0)), b);
    }
    // E_n(0)
    let euler_at_zero = [int(1), rat(-1, 2), int(0), rat(1, 4), int(0), rat(-1, 2)];
    for (n, e) in euler_at_zero.iter().enumerate() {
        assert_eq!(&euler_poly(n, &int(0)), e);
    }
    // B^(2)_2(0) = 5/6 - 1 = ... from (v/(e^v-1))^2 = 1 - v + 5/12 v^2 + ...
    assert_eq!(higher_bernoulli(2, &int(2), &int(0)), rat(5, 6));
    // power 0 leaves e^(xv)
    assert_eq!(higher_bernoulli(3, &int(0), &rat(1, 2)), rat(1, 8));
}

#[test]
fn frobenius_euler_specialisations() {
    let x = rat(2, 5);
    for n in 0..8 {
        assert_eq!(frobenius_euler(n, &int(1), &x, &int(-1)).unwrap(), euler_poly(n, &x));
        assert_eq!(frobenius_euler(n, &int(0), &x, &rat(1, 3)).unwrap(), pw(&x, n));
    }
    // H_1(x | u) = x - 1/(1 - u)
    assert_eq!(frobenius_euler(1, &int(1), &x, &rat(1, 3)).unwrap(), x - rat(3, 2));
    assert!(frobenius_euler(2, &int(1), &int(0), &int(1)).is_err());
}

#[test]
fn probabilistic_families_reduce_at_y_equal_one() {
    let one = Distribution::Constant { c: int(1) };
    for z in [rat(1, 3), rat(-2, 7), int(2)] {
        for n in 0..8 {
            assert_eq!(prob_bernoulli(&one, n, &z).unwrap(), higher_bernoulli(n, &int(1), &z));
            assert_eq!(prob_euler(&one, n, &z).unwrap(), euler_poly(n, &z));
            assert_eq!(prob_bernoulli_higher(&one, n, 3, &z).unwrap(), higher_bernoulli(n, &int(3), &z));
        }
    }
}

#[test]
fn bernstein_closed_forms_match_generating_functions() {
    let mut points = sample_points();
    points.push(QPoint::classical(rat(1, 3)));
    for p in &points {
        let (_, z) = p.bracket_conjugates();
        let x = p.bracket();
        for n in 0..=10 {
            for r in 0..=n {
                let closed = binomial_rat(n, r) * pw(&x, r) * pw(&z, n - r);
                assert_eq!(qbernstein(r, n, p).unwrap(), closed, "{p} r={r} n={n}");
            }
        }
    }
    for n in 0..=10 {
        for r in 0..=n {
            let x = rat(2, 7);
            let closed = binomial_rat(n, r) * pw(&x, r) * pw(&(int(1) - &x), n - r);
            assert_eq!(bernstein_classical(r, n, &x).unwrap(), closed);
            let gf = qbernstein_gf(r, &QPoint::classical(x.clone()), n);
            assert_eq!(gf.egf_coeff(n).unwrap(), closed);
        }
    }
}

#[test]
fn laurent_form_agrees_with_scalar_evaluation() {
    for d in [grid::six_laws(), grid::constant()].concat().iter().step_by(3) {
        for p in sample_points().iter().take(2) {
            for n in 0..=5 {
                for r in 0..=n {
                    let form = prob_qbernstein_laurent(d, r, n, &p.q()).unwrap();
                    assert_eq!(form.eval(&p.t()), prob_qbernstein(d, r, n, p, 6).unwrap(), "{d} {p} r={r} n={n}");
                }
            }
        }
    }
}

#[test]
fn corrected_derivative_identity_for_all_laws() {
    const N: usize = 10;
    for d in grid::six_laws().iter().step_by(2) {
        for p in sample_points().iter().take(3) {
            let (_, z) = p.bracket_conjugates();
            let x = p.bracket();
            let m = mgf_series(d, N).unwrap();
            let log_derivative = m.derive().mul(&m.truncate(N - 1).recip().unwrap()).unwrap();
            for r in 0..=4 {
                let f = prob_qbernstein_gf(d, r, p, N).unwrap();
                let below = match r {
                    0 => Series::zero(N - 1),
                    _ => prob_qbernstein_gf(d, r - 1, p, N).unwrap().truncate(N - 1),
                };
                let rhs = below.mul_scalar(&x).add(&f.truncate(N - 1).mul(&log_derivative).unwrap().mul_scalar(&z)).unwrap();
                assert_eq!(f.derive(), rhs, "{d} {p} r={r}");
            }
        }
    }
}

#[test]
fn documented_values() {
    let p = QPoint::new(rat(2, 3), 1, 2).unwrap();
    assert_eq!(qbernstein(1, 2, &p).unwrap(), rat(18, 25));
    let one = Distribution::Constant { c: int(1) };
    assert_eq!(prob_qbernstein(&one, 1, 2, &p, 16).unwrap(), rat(18, 25));
    let poisson = Distribution::Poisson { alpha: rat(2, 3) };
    let (_, z) = p.bracket_conjugates();
    let expected = binomial_rat(4, 1) * p.bracket() * bell_poly(3, &(rat(2, 3) * z));
    assert_eq!(prob_qbernstein(&poisson, 1, 4, &p, 16).unwrap(), expected);
}
