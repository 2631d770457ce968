//! Truncated power series over total degree.

use super::poly::Polynomial;
use crate::error::Error;

/// Drops all terms of total degree greater than `degree`.
pub fn series_truncate(p: &Polynomial, degree: u32) -> Polynomial {
    p.truncate(degree)
}

/// Inverse of `p` as a power series, correct through total degree `degree`.
pub fn series_inverse(p: &Polynomial, degree: u32) -> Result<Polynomial, Error> {
    let c0 = p.constant_term();
    let c0_inv = c0.recip().ok_or(Error::NonUnitConstantTerm)?;
    // p = c0 (1 - u) with u free of constant term, so 1/p = c0^-1 (1 + u + u^2 + ...)
    let u = &Polynomial::one() - &p.scale(&c0_inv);
    let u = u.truncate(degree);
    let mut sum = Polynomial::one();
    let mut power = Polynomial::one();
    for _ in 0..degree {
        power = power.mul_truncated(&u, degree);
        if power.is_zero() {
            break;
        }
        sum = &sum + &power;
    }
    Ok(sum.scale(&c0_inv))
}

/// `p * q` modulo terms above `degree`.
pub fn series_mul(p: &Polynomial, q: &Polynomial, degree: u32) -> Polynomial {
    p.mul_truncated(q, degree)
}
