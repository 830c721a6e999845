//! Exact probabilistic q-Bernstein polynomials.
//!
//! The crate computes `B^Y_{r,n}(x, q)`, the coefficients of
//! `(v [x]_q)^r / r! * E[e^(vY)]^([1-x]_q)`, together with the special
//! numbers and polynomials they relate to (probabilistic Stirling numbers,
//! Bell, Bernoulli, Euler and Frobenius-Euler families), the bosonic and
//! fermionic p-adic q-integrals, and an auditor that checks a catalogue of
//! identities between them at random exact points.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, `ln q`
//! is a formal symbol, and equality is equality.

pub mod audit;
pub mod cli;
pub mod distributions;
pub mod error;
pub mod exact;
pub mod families;
pub mod padic;
pub mod qcalc;
pub mod series;

pub use distributions::Distribution;
pub use error::{Error, Result};
pub use exact::{LaurentT, LogExt, Rational, UniPoly};
pub use qcalc::QPoint;
pub use series::Series;
