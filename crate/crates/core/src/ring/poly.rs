//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use super::coeff::Coeff;
use crate::error::Error;

/// A formal variable. Variables are ordered by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable(Arc<str>);

impl Variable {
    pub fn new(name: &str) -> Variable {
        Variable(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A power product of variables. Exponents are strictly positive and the
/// powers are sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    powers: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial { degree: 1, powers: vec![(v, 1)] }
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Variable, u32)>) -> Monomial {
        let mut acc: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *acc.entry(v).or_default() += e;
        }
        let powers: Vec<_> = acc.into_iter().filter(|(_, e)| *e > 0).collect();
        let degree = powers.iter().map(|(_, e)| e).sum();
        Monomial { degree, powers }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.powers
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (&self.powers[i], &other.powers[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    powers.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    powers.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    powers.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        powers.extend_from_slice(&self.powers[i..]);
        powers.extend_from_slice(&other.powers[j..]);
        Monomial { degree: self.degree + other.degree, powers }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut powers = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for (v, e) in &self.powers {
            let mut e = *e;
            if j < other.powers.len() {
                match other.powers[j].0.cmp(v) {
                    Ordering::Less => return None,
                    Ordering::Equal => {
                        let f = other.powers[j].1;
                        if f > e {
                            return None;
                        }
                        e -= f;
                        j += 1;
                    }
                    Ordering::Greater => {}
                }
            }
            if e > 0 {
                powers.push((v.clone(), e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { degree: self.degree - other.degree, powers })
    }

    /// Display order: lexicographic on the expanded variable sequence, so
    /// `1 < a < a^2 < a*b < b`.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        let (mut ri, mut rj) = (0u32, 0u32);
        loop {
            if ri == 0 {
                if i < self.powers.len() {
                    ri = self.powers[i].1;
                    i += 1;
                } else {
                    return if rj == 0 && j >= other.powers.len() {
                        Ordering::Equal
                    } else {
                        Ordering::Less
                    };
                }
            }
            if rj == 0 {
                if j < other.powers.len() {
                    rj = other.powers[j].1;
                    j += 1;
                } else {
                    return Ordering::Greater;
                }
            }
            let (a, b) = (&self.powers[i - 1].0, &other.powers[j - 1].0);
            match a.cmp(b) {
                Ordering::Equal => {
                    let step = ri.min(rj);
                    ri -= step;
                    rj -= step;
                }
                ord => return ord,
            }
        }
    }
}

/// Graded lexicographic order; `a > b > c` among variables.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (x, y) in self.powers.iter().zip(&other.powers) {
                match x.0.cmp(&y.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match x.1.cmp(&y.1) {
                        Ordering::Equal => {}
                        ord => return ord,
                    },
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.powers.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in canonical form: no zero coefficients are stored, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Coeff::ONE)
    }

    pub fn constant(c: impl Into<Coeff>) -> Polynomial {
        Polynomial::term(c.into(), Monomial::one())
    }

    pub fn var(name: &str) -> Polynomial {
        Polynomial::term(Coeff::ONE, Monomial::var(Variable::new(name)))
    }

    pub fn term(c: Coeff, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Parses expressions such as `"a*b*f - a*d*e"`, `"1 - d*e*f"` or
    /// `"-3/2*x^2 + y"`. No parentheses.
    pub fn parse(s: &str) -> Result<Polynomial, Error> {
        let err = |msg: &str| Error::Parse { line: 0, column: 0, message: format!("{msg} in polynomial {s:?}") };
        let mut p = Polynomial::zero();
        let mut chunk = String::new();
        let mut sign = Coeff::ONE;
        let flush = |chunk: &str, sign: &Coeff, p: &mut Polynomial| -> Result<(), Error> {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(err("empty term"));
            }
            let mut coeff = sign.clone();
            let mut powers = Vec::new();
            for factor in chunk.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff = &coeff * &Coeff::parse(factor).ok_or_else(|| err("bad number"))?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| err("bad exponent"))?),
                        None => (factor, 1),
                    };
                    if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return Err(err("bad variable name"));
                    }
                    powers.push((Variable::new(name), exp));
                }
            }
            p.add_term(Monomial::from_powers(powers), &coeff);
            Ok(())
        };
        let mut seen_any = false;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !chunk.trim().is_empty() {
                flush(&chunk, &sign, &mut p)?;
                chunk.clear();
                sign = if ch == '-' { Coeff::Int(-1) } else { Coeff::ONE };
            } else if (ch == '+' || ch == '-') && chunk.trim().is_empty() {
                if ch == '-' {
                    sign = -sign;
                }
            } else {
                chunk.push(ch);
            }
            seen_any = true;
        }
        if !seen_any {
            return Err(err("empty input"));
        }
        flush(&chunk, &sign, &mut p)?;
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest total degree among the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// The term that is printed first.
    pub fn first_display_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().min_by(|a, b| a.0.display_cmp(b.0))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term of total degree above `degree`.
    pub fn truncate(&self, degree: u32) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= degree).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Product truncated to total degree `degree`, skipping the discarded
    /// products instead of forming them.
    pub fn mul_truncated(&self, other: &Polynomial, degree: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.degree() > degree {
                continue;
            }
            for (n, d) in &other.terms {
                if m.degree() + n.degree() <= degree {
                    out.add_term(m.mul(n), &(c * d));
                }
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if divisor.terms.len() == 1 {
            let mut q = BTreeMap::new();
            for (m, c) in &self.terms {
                q.insert(m.div(lead_m)?, c / lead_c);
            }
            return Some(Polynomial { terms: q });
        }
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c / lead_c;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), &-(dc * &qc));
            }
            quotient.add_term(qm, &qc);
        }
        Some(quotient)
    }

    /// Substitutes constants for some variables.
    pub fn specialize(&self, values: &BTreeMap<Variable, Coeff>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.powers() {
                match values.get(v) {
                    Some(val) => coeff = &coeff * &val.pow(*e),
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.add_term(Monomial::from_powers(rest), &coeff);
        }
        out
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self.terms.keys().flat_map(|m| m.powers().iter().map(|(v, _)| v.clone())).collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl From<Coeff> for Polynomial {
    fn from(c: Coeff) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), &(c * d));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Canonical rendering: terms in display order, `*` between factors,
/// `^` for powers, e.g. `a*b*f - a*d*e`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        for (n, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
