//! Special numbers and polynomials, each defined by its generating function.
//!
//! Every value here is an exponential-generating-function coefficient of a
//! series built by the [`crate::series`] engine. Closed forms such as
//! [`bernstein_classical`] exist only as cross-checks. The `*_gf` functions
//! return the whole generating function so callers that need many indices
//! expand it once.

mod appell;
mod bernstein;
mod stirling;

pub use appell::{
    bell_gf, bell_poly, euler_gf, euler_poly, frobenius_euler, frobenius_euler_gf, higher_bernoulli, higher_bernoulli_gf,
    prob_bernoulli, prob_bernoulli_higher, prob_bernoulli_higher_gf, prob_euler, prob_euler_gf,
};
pub use bernstein::{
    bernstein_classical, prob_qbernstein, prob_qbernstein_gf, prob_qbernstein_laurent, qbernstein, qbernstein_gf,
};
pub use stirling::{prob_stirling2, stirling2, ProbStirlingTable};
