//! Exact rational coefficients.
//!
//! Almost every coefficient that shows up while expanding weighted sums of
//! combinatorial objects is a small integer, so [`Coeff`] keeps an `i64`
//! representation and only switches to a `BigRational` when a value overflows
//! or stops being integral. The representation is canonical: a value that fits
//! in `Int` is never stored as `Big`, which keeps derived equality and hashing
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
pub enum Coeff {
    Int(i64),
    Big(BigRational),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Int(0);
    pub const ONE: Coeff = Coeff::Int(1);

    pub fn from_ratio(numer: i64, denom: i64) -> Coeff {
        assert!(denom != 0, "zero denominator");
        Coeff::from_big(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    fn from_big(r: BigRational) -> Coeff {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Coeff::Int(v);
            }
        }
        Coeff::Big(r)
    }

    fn to_big(&self) -> BigRational {
        match self {
            Coeff::Int(v) => BigRational::from_integer(BigInt::from(*v)),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Int(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Int(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Int(v) => *v < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Int(_) => true,
            Coeff::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, exp: u32) -> Coeff {
        let mut acc = Coeff::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coeff::Int(1) => Coeff::ONE,
            Coeff::Int(-1) => Coeff::Int(-1),
            _ => Coeff::from_big(self.to_big().recip()),
        })
    }

    /// Parses `"3"`, `"-2/7"` and similar.
    pub fn parse(s: &str) -> Option<Coeff> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Coeff::from_big(BigRational::new(n, d)))
            }
            None => Some(Coeff::from_big(BigRational::from_integer(s.parse().ok()?))),
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Int(v)
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl Hash for Coeff {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Coeff::Int(v) => {
                0u8.hash(state);
                v.hash(state);
            }
            Coeff::Big(r) => {
                1u8.hash(state);
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &'a Coeff) -> Coeff {
        if let (Coeff::Int(a), Coeff::Int(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Int(v);
            }
        }
        Coeff::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &'a Coeff) -> Coeff {
        if let (Coeff::Int(a), Coeff::Int(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Int(v);
            }
        }
        Coeff::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &'a Coeff) -> Coeff {
        if let (Coeff::Int(a), Coeff::Int(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Int(v);
            }
        }
        Coeff::from_big(self.to_big() * rhs.to_big())
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    /// Panics on division by zero, like the primitive integer types.
    fn div(self, rhs: &'a Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "coefficient division by zero");
        if let (Coeff::Int(a), Coeff::Int(b)) = (self, rhs) {
            if a % b == 0 {
                if let Some(v) = a.checked_div(*b) {
                    return Coeff::Int(v);
                }
            }
        }
        Coeff::from_big(self.to_big() / rhs.to_big())
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Int(v) => match v.checked_neg() {
                Some(n) => Coeff::Int(n),
                None => Coeff::from_big(-BigRational::from_integer(BigInt::from(v))),
            },
            Coeff::Big(r) => Coeff::from_big(-r),
        }
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::ZERO
    }
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::ONE
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(v) => write!(f, "{v}"),
            Coeff::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
