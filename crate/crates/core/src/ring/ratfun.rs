//! Formal fractions of polynomials.
//!
//! No multivariate GCD is ever computed. The denominator is kept as a product
//! of normalized factors (each scaled so its first displayed term has
//! coefficient 1); denominators are combined by structural least common
//! multiple, and a factor is cancelled only when it divides the numerator
//! exactly. Equality is decided by cross-multiplication.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::coeff::Coeff;
use super::poly::Polynomial;
use super::series;
use crate::error::Error;

#[derive(Clone, Default)]
pub struct RationalFunction {
    num: Polynomial,
    /// Sorted, distinct, non-constant normalized factors with multiplicity.
    den: Vec<(Polynomial, u32)>,
}

fn normalize_factor(p: Polynomial) -> (Polynomial, Coeff) {
    let lead = p.first_display_term().map(|(_, c)| c.clone()).expect("nonzero factor");
    let inv = lead.recip().expect("nonzero coefficient");
    (p.scale(&inv), lead)
}

type Factors = Vec<(Polynomial, u32)>;

fn expand(factors: &[(Polynomial, u32)]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

/// Least common multiple of two factor lists plus the cofactors `lcm / a`
/// and `lcm / b`.
fn lcm(a: &[(Polynomial, u32)], b: &[(Polynomial, u32)]) -> (Factors, Factors, Factors) {
    let mut out = Vec::new();
    let mut ca = Vec::new();
    let mut cb = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        match ord {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                cb.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                ca.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let (ea, eb) = (a[i].1, b[j].1);
                out.push((a[i].0.clone(), ea.max(eb)));
                if eb > ea {
                    ca.push((a[i].0.clone(), eb - ea));
                } else if ea > eb {
                    cb.push((a[i].0.clone(), ea - eb));
                }
                i += 1;
                j += 1;
            }
        }
    }
    (out, ca, cb)
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction::default()
    }

    pub fn one() -> Self {
        Polynomial::one().into()
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Polynomial::constant(c).into()
    }

    pub fn var(name: &str) -> Self {
        Polynomial::var(name).into()
    }

    /// `num / den`; fails with `DivisionByZero` when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        RationalFunction::from(num).checked_div(&den.into())
    }

    /// Parses `"p"` or `"(p)/(q)"` where `p`, `q` are polynomial expressions.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((num, den)) = rest.split_once(")/(") {
                let den = den.strip_suffix(')').unwrap_or(den);
                return RationalFunction::new(Polynomial::parse(num)?, Polynomial::parse(den)?);
            }
        }
        Ok(Polynomial::parse(s)?.into())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn denominator(&self) -> Polynomial {
        expand(&self.den)
    }

    pub fn denominator_factors(&self) -> &[(Polynomial, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_empty().then_some(&self.num)
    }

    /// Cancels denominator factors that divide the numerator exactly.
    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut kept = Vec::with_capacity(self.den.len());
        for (f, mut e) in std::mem::take(&mut self.den) {
            while e > 0 {
                match self.num.div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                kept.push((f, e));
            }
        }
        self.den = kept;
        self
    }

    fn merge_factors(a: &[(Polynomial, u32)], b: &[(Polynomial, u32)]) -> Vec<(Polynomial, u32)> {
        let mut out: Vec<(Polynomial, u32)> = a.to_vec();
        for (f, e) in b {
            match out.binary_search_by(|(g, _)| g.cmp(f)) {
                Ok(i) => out[i].1 += e,
                Err(i) => out.insert(i, (f.clone(), *e)),
            }
        }
        out
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = &self.num * &expand(&rhs.den);
        let mut den = self.den.clone();
        if rhs.num.is_constant() {
            num = num.scale(&rhs.num.constant_term().recip().expect("nonzero"));
        } else {
            let (f, lead) = normalize_factor(rhs.num.clone());
            num = num.scale(&lead.recip().expect("nonzero"));
            den = Self::merge_factors(&den, &[(f, 1)]);
        }
        Ok(RationalFunction { num, den }.reduce())
    }

    pub fn recip(&self) -> Result<RationalFunction, Error> {
        RationalFunction::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> RationalFunction {
        let mut acc = RationalFunction::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Coeff) -> RationalFunction {
        RationalFunction { num: self.num.scale(c), den: if c.is_zero() { Vec::new() } else { self.den.clone() } }
    }

    /// Cross-multiplication equality.
    pub fn ratfun_eq(&self, other: &RationalFunction) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        if self.num.is_zero() || other.num.is_zero() {
            return self.num.is_zero() && other.num.is_zero();
        }
        let (_, ca, cb) = lcm(&self.den, &other.den);
        &self.num * &expand(&ca) == &other.num * &expand(&cb)
    }

    /// Power-series expansion through total degree `degree`. The denominator
    /// must have a unit constant term.
    pub fn series(&self, degree: u32) -> Result<Polynomial, Error> {
        if self.den.is_empty() {
            return Ok(self.num.truncate(degree));
        }
        let inv = series::series_inverse(&self.denominator(), degree)?;
        Ok(self.num.mul_truncated(&inv, degree))
    }

    /// Canonical text: the polynomial itself, or `(num)/(den)` with the
    /// denominator expanded.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        RationalFunction { num, den: Vec::new() }
    }
}

impl From<Coeff> for RationalFunction {
    fn from(c: Coeff) -> Self {
        Polynomial::constant(c).into()
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Polynomial::constant(c).into()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.ratfun_eq(other)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RationalFunction { num: &self.num + &rhs.num, den: self.den.clone() }.reduce();
        }
        let (den, ca, cb) = lcm(&self.den, &rhs.den);
        let num = &(&self.num * &expand(&ca)) + &(&rhs.num * &expand(&cb));
        RationalFunction { num, den }.reduce()
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let num = &self.num * &rhs.num;
        if rhs.den.is_empty() && self.den.is_empty() {
            return num.into();
        }
        let den = RationalFunction::merge_factors(&self.den, &rhs.den);
        RationalFunction { num, den }.reduce()
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; use [`RationalFunction::checked_div`] to
    /// get an error instead.
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("rational function division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.denominator())
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn walk_sum_times_path() {
        let w = r("(a*b)/(1 - d*e*f)");
        let prod = &w * &r("c*e*g");
        assert_eq!(prod.to_string(), "(a*b*c*e*g)/(1 - d*e*f)");
    }

    #[test]
    fn self_quotient_is_one() {
        let f = r("(x + y^2)/(3*z - 1)");
        let q = &f / &f;
        assert!(q.is_polynomial());
        assert_eq!(q.to_string(), "1");
    }

    #[test]
    fn squared_denominator_cancels() {
        let num = &(&p("a*b") * &p("c*e*g")) * &p("1 - d*e*f");
        let den = p("1 - d*e*f").pow(2);
        let q = RationalFunction::new(num.clone(), den).unwrap();
        assert!(q.ratfun_eq(&r("(a*b*c*e*g)/(1 - d*e*f)")));
        // built from the factored denominator the common factor cancels structurally
        let f = r("1 - d*e*f");
        let factored = &(&RationalFunction::from(num) / &f) / &f;
        assert_eq!(factored.to_string(), "(a*b*c*e*g)/(1 - d*e*f)");
    }

    #[test]
    fn cross_multiplication_equality() {
        let lhs = r("(a*b)/(1 - d*e*f)");
        let rhs = RationalFunction {
            num: &p("a*b") * &p("1 + d*e*f"),
            den: vec![(p("1 - d*e*f"), 1), (p("1 + d*e*f"), 1)],
        };
        assert!(lhs.ratfun_eq(&rhs));
        assert!(!lhs.ratfun_eq(&r("a*b")));
        assert!(r("(x)/(x)").ratfun_eq(&RationalFunction::one()));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(r("x").checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero)));
        assert!(RationalFunction::new(p("x"), Polynomial::zero()).is_err());
    }

    #[test]
    fn denominator_is_sign_normalized() {
        let q = RationalFunction::new(p("x"), p("-2 + 4*y")).unwrap();
        assert_eq!(q.denominator(), p("1 - 2*y"));
        assert_eq!(q.numerator(), &p("-1/2*x"));
    }

    #[test]
    fn sum_over_common_denominator() {
        let a = r("(x)/(x + y)");
        let b = r("(y)/(x + y)");
        assert_eq!((&a + &b).to_string(), "1");
    }

    #[test]
    fn series_of_geometric_sum() {
        let w = r("(a*b)/(1 - d*e*f)");
        assert_eq!(w.series(7).unwrap(), p("a*b + a*b*d*e*f"));
        assert_eq!(w.series(8).unwrap(), p("a*b + a*b*d*e*f + a*b*d^2*e^2*f^2"));
    }
}
