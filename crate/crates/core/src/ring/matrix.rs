//! Small dense matrices over the rational-function field.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::ratfun::RationalFunction;
use crate::error::Error;

/// Largest size the cofactor determinant accepts.
pub const MAX_DET_SIZE: usize = 12;

#[derive(Clone, PartialEq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RingMatrix {
        RingMatrix { rows, cols, entries: vec![RationalFunction::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RingMatrix {
        let mut m = RingMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RationalFunction::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> RingMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<RingMatrix, Error> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(RingMatrix { rows: n, cols: m, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RingMatrix {
        RingMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn transpose(&self) -> RingMatrix {
        RingMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &RingMatrix) -> Result<RingMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        Ok(RingMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .filter(|&l| !self[(i, l)].is_zero() && !rhs[(l, j)].is_zero())
                .map(|l| &self[(i, l)] * &rhs[(l, j)])
                .sum()
        }))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Cofactor expansion along rows, memoized on the set of columns used.
    pub fn determinant(&self) -> Result<RationalFunction, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(Error::TooLarge { size: n, max: MAX_DET_SIZE });
        }
        // minors[mask] = det(rows 0..popcount(mask), columns in mask)
        let mut minors: Vec<Option<RationalFunction>> = vec![None; 1 << n];
        minors[0] = Some(RationalFunction::one());
        let mut layer: Vec<u32> = vec![0];
        for row in 0..n {
            let mut next = Vec::new();
            for &mask in &layer {
                for j in 0..n {
                    if mask & (1 << j) == 0 {
                        let sup = mask | (1 << j);
                        if minors[sup as usize].is_none() {
                            minors[sup as usize] = Some(self.minor_step(&minors, sup, row));
                            next.push(sup);
                        }
                    }
                }
            }
            layer = next;
        }
        Ok(minors[(1usize << n) - 1].take().unwrap_or_else(RationalFunction::one))
    }

    fn minor_step(&self, minors: &[Option<RationalFunction>], mask: u32, row: usize) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = &self[(row, j)];
            if entry.is_zero() {
                continue;
            }
            let sub = minors[(mask & !(1 << j)) as usize].as_ref().expect("previous layer");
            if sub.is_zero() {
                continue;
            }
            let later = (mask >> (j + 1)).count_ones();
            let term = entry * sub;
            acc = if later.is_multiple_of(2) { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Inverse via the adjugate.
    pub fn inverse(&self) -> Result<RingMatrix, Error> {
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut out = RingMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self.cofactor(i, j)?.checked_div(&det)?;
            }
        }
        Ok(out)
    }

    /// Signed minor `(-1)^(i+j) det(self without row i and column j)`.
    pub fn cofactor(&self, i: usize, j: usize) -> Result<RationalFunction, Error> {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        let d = self.submatrix(&rows, &cols).determinant()?;
        Ok(if (i + j).is_multiple_of(2) { d } else { -d })
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.rows).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl Index<(usize, usize)> for RingMatrix {
    type Output = RationalFunction;
    fn index(&self, (i, j): (usize, usize)) -> &RationalFunction {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RingMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RationalFunction {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A permutation of `0..k` together with its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, Error> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Shape(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Permutation {
        Permutation { images: (0..k).collect() }
    }

    /// All permutations of `0..k` in lexicographic order.
    pub fn all(k: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..k).permutations(k).map(|images| Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inversions(&self) -> usize {
        inversion_count(&self.images)
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Number of pairs `i < j` with `seq[i] > seq[j]`.
pub fn inversion_count<T: Ord>(seq: &[T]) -> usize {
    let mut n = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                n += 1;
            }
        }
    }
    n
}
