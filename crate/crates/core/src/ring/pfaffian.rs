//! Skew-symmetric matrices and two independent Pfaffian algorithms.

use std::collections::HashMap;

use super::matrix::RingMatrix;
use super::ratfun::RationalFunction;
use crate::error::Error;

/// Skew-symmetric matrix stored by its strictly upper triangle, so
/// `A[i][j] = -A[j][i]` and `A[i][i] = 0` hold by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix {
    size: usize,
    upper: Vec<RationalFunction>,
}

impl SkewMatrix {
    pub fn zeros(size: usize) -> SkewMatrix {
        SkewMatrix { size, upper: vec![RationalFunction::zero(); size * size.saturating_sub(1) / 2] }
    }

    /// Builds the matrix from `f(i, j)` for `i < j`.
    pub fn from_upper(size: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> SkewMatrix {
        let mut upper = Vec::with_capacity(size * size.saturating_sub(1) / 2);
        for i in 0..size {
            for j in i + 1..size {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { size, upper }
    }

    /// The skew matrix whose above-diagonal entries are all 1.
    pub fn all_ones(size: usize) -> SkewMatrix {
        SkewMatrix::from_upper(size, |_, _| RationalFunction::one())
    }

    pub fn from_matrix(m: &RingMatrix) -> Result<SkewMatrix, Error> {
        if !m.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(SkewMatrix::from_upper(m.rows(), |i, j| m[(i, j)].clone()))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.size);
        i * self.size - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Entry `(i, j)` for any `i`, `j`.
    pub fn get(&self, i: usize, j: usize) -> RationalFunction {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => -&self.upper[self.slot(j, i)],
            Equal => RationalFunction::zero(),
        }
    }

    /// Reference to the upper entry `(i, j)`, `i < j`.
    pub fn upper(&self, i: usize, j: usize) -> &RationalFunction {
        &self.upper[self.slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        assert!(i < j, "set the upper entry (i < j)");
        let s = self.slot(i, j);
        self.upper[s] = v;
    }

    /// Principal submatrix on the given (increasing) indices.
    pub fn principal(&self, idx: &[usize]) -> SkewMatrix {
        SkewMatrix::from_upper(idx.len(), |a, b| self.get(idx[a], idx[b]))
    }

    pub fn to_matrix(&self) -> RingMatrix {
        RingMatrix::from_fn(self.size, self.size, |i, j| self.get(i, j))
    }

    pub fn determinant(&self) -> Result<RationalFunction, Error> {
        self.to_matrix().determinant()
    }
}

/// A perfect matching on `0..2n`, each pair stored as `(small, large)` and
/// the pairs sorted by their smaller element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectMatching {
    pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<PerfectMatching, Error> {
        let n = pairs.len() * 2;
        let mut seen = vec![false; n];
        let mut norm = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            if a == b || b >= n || std::mem::replace(&mut seen[a], true) || std::mem::replace(&mut seen[b], true) {
                return Err(Error::Shape("not a perfect matching".into()));
            }
            norm.push((a, b));
        }
        norm.sort_unstable();
        Ok(PerfectMatching { pairs: norm })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of pairs `{i, j}`, `{k, l}` with `i < k < j < l`.
    pub fn crossings(&self) -> usize {
        let mut n = 0;
        for (x, &(i, j)) in self.pairs.iter().enumerate() {
            for &(k, l) in &self.pairs[x + 1..] {
                if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                    n += 1;
                }
            }
        }
        n
    }

    /// Every perfect matching of `0..size`; empty when `size` is odd.
    pub fn all(size: usize) -> Vec<PerfectMatching> {
        fn rec(remaining: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
            if remaining.is_empty() {
                out.push(PerfectMatching { pairs: acc.clone() });
                return;
            }
            let first = remaining.remove(0);
            for idx in 0..remaining.len() {
                let partner = remaining.remove(idx);
                acc.push((first, partner));
                rec(remaining, acc, out);
                acc.pop();
                remaining.insert(idx, partner);
            }
            remaining.insert(0, first);
        }
        let mut out = Vec::new();
        if size.is_multiple_of(2) {
            rec(&mut (0..size).collect(), &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Pf(A) as the signed sum over perfect matchings, each weighted by
/// `(-1)^crossings`. Odd sizes give 0.
pub fn pfaffian_matchings(a: &SkewMatrix) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for m in PerfectMatching::all(a.size()) {
        let mut term = RationalFunction::one();
        for &(i, j) in m.pairs() {
            let e = a.upper(i, j);
            if e.is_zero() {
                term = RationalFunction::zero();
                break;
            }
            term = &term * e;
        }
        if term.is_zero() {
            continue;
        }
        acc = if m.crossings() % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Pf(A) by expansion along the first row,
/// `Pf(A) = sum_j (-1)^j a_{1j} Pf(A without rows/cols 1, j)` (1-based),
/// memoized on the set of remaining indices. Odd sizes give 0.
pub fn pfaffian_recursive(a: &SkewMatrix) -> RationalFunction {
    fn rec(a: &SkewMatrix, mask: u64, memo: &mut HashMap<u64, RationalFunction>) -> RationalFunction {
        if mask == 0 {
            return RationalFunction::one();
        }
        if mask.count_ones() % 2 == 1 {
            return RationalFunction::zero();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = RationalFunction::zero();
        let mut pos = 0;
        for j in first + 1..a.size() {
            if rest & (1 << j) == 0 {
                continue;
            }
            pos += 1;
            let e = a.upper(first, j);
            if e.is_zero() {
                continue;
            }
            let sub = rec(a, rest & !(1 << j), memo);
            if sub.is_zero() {
                continue;
            }
            let term = e * &sub;
            // j sits at 1-based position pos + 1 within the remaining set
            acc = if pos % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        memo.insert(mask, acc.clone());
        acc
    }
    assert!(a.size() < 64, "pfaffian_recursive supports at most 63 rows");
    let full = if a.size() == 0 { 0 } else { (1u64 << a.size()) - 1 };
    rec(a, full, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig3() -> SkewMatrix {
        let names = ["a", "b", "c", "d", "e", "f"];
        let mut it = names.iter();
        SkewMatrix::from_upper(4, |_, _| RationalFunction::var(it.next().unwrap()))
    }

    #[test]
    fn four_by_four_symbolic() {
        let a = fig3();
        assert_eq!(pfaffian_matchings(&a).to_string(), "a*f - b*e + c*d");
        assert_eq!(pfaffian_recursive(&a).to_string(), "a*f - b*e + c*d");
        let pf = pfaffian_matchings(&a);
        assert_eq!(a.determinant().unwrap(), &pf * &pf);
    }

    #[test]
    fn empty_and_odd() {
        assert_eq!(pfaffian_matchings(&SkewMatrix::zeros(0)).to_string(), "1");
        assert_eq!(pfaffian_recursive(&SkewMatrix::zeros(0)).to_string(), "1");
        assert!(pfaffian_matchings(&SkewMatrix::all_ones(3)).is_zero());
        assert!(pfaffian_recursive(&SkewMatrix::all_ones(5)).is_zero());
    }

    #[test]
    fn all_ones_pfaffian_is_one() {
        for n in 0..=6 {
            let m = SkewMatrix::all_ones(2 * n);
            assert_eq!(pfaffian_recursive(&m).to_string(), "1", "n = {n}");
        }
        assert_eq!(pfaffian_matchings(&SkewMatrix::all_ones(6)).to_string(), "1");
    }

    #[test]
    fn matching_counts_and_crossings() {
        assert_eq!(PerfectMatching::all(6).len(), 15);
        assert_eq!(PerfectMatching::all(5).len(), 0);
        assert_eq!(PerfectMatching::new(vec![(0, 2), (1, 3)]).unwrap().crossings(), 1);
        assert_eq!(PerfectMatching::new(vec![(0, 3), (1, 2)]).unwrap().crossings(), 0);
        assert!(PerfectMatching::new(vec![(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn skew_storage() {
        let a = fig3();
        assert_eq!(a.get(2, 0).to_string(), "-b");
        assert!(a.get(3, 3).is_zero());
        assert!(a.to_matrix().is_skew_symmetric());
        assert_eq!(SkewMatrix::from_matrix(&a.to_matrix()).unwrap(), a);
        assert!(SkewMatrix::from_matrix(&RingMatrix::identity(2)).is_err());
    }
}
