//! Exact arithmetic: coefficients, polynomials, rational functions, matrices,
//! Pfaffians and truncated power series.

pub mod coeff;
pub mod matrix;
pub mod pfaffian;
pub mod poly;
pub mod ratfun;
pub mod series;

pub use coeff::Coeff;
pub use matrix::{inversion_count, Permutation, RingMatrix, MAX_DET_SIZE};
pub use pfaffian::{pfaffian_matchings, pfaffian_recursive, PerfectMatching, SkewMatrix};
pub use poly::{Monomial, Polynomial, Variable};
pub use ratfun::RationalFunction;
pub use series::{series_inverse, series_mul, series_truncate};
