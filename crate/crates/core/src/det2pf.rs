//! From determinant relations to Pfaffian relations.
//!
//! A [`MinorFamily`] is an `A x B` table of values `C1(a, b)`. Its `k x k`
//! minors define `C_k(a, b)`, and summing `C_k` over strictly increasing
//! `b`-tuples gives `R_k(a)`. For even `k`, `R_k(a)` is the Pfaffian of the
//! skew matrix `(R_2(a_i, a_j))`.

use itertools::Itertools;
use rand::Rng;

use crate::error::Error;
use crate::report::{CheckResult, Identity};
use crate::ring::{pfaffian_matchings, pfaffian_recursive, RationalFunction, RingMatrix, SkewMatrix};

#[derive(Clone, Debug)]
pub struct MinorFamily {
    a_labels: Vec<String>,
    b_labels: Vec<String>,
    table: RingMatrix,
}

impl MinorFamily {
    /// `table` has one row per `a` label and one column per `b` label, with
    /// columns in the total order of `B`.
    pub fn new(a_labels: Vec<String>, b_labels: Vec<String>, table: RingMatrix) -> Result<MinorFamily, Error> {
        if table.rows() != a_labels.len() || table.cols() != b_labels.len() {
            return Err(Error::Shape(format!(
                "table is {}x{} but there are {} row and {} column labels",
                table.rows(),
                table.cols(),
                a_labels.len(),
                b_labels.len()
            )));
        }
        Ok(MinorFamily { a_labels, b_labels, table })
    }

    /// Family with numeric labels `0..rows` and `0..cols`.
    pub fn from_table(table: RingMatrix) -> MinorFamily {
        let a = (0..table.rows()).map(|i| i.to_string()).collect();
        let b = (0..table.cols()).map(|j| j.to_string()).collect();
        MinorFamily { a_labels: a, b_labels: b, table }
    }

    pub fn a_labels(&self) -> &[String] {
        &self.a_labels
    }

    pub fn b_labels(&self) -> &[String] {
        &self.b_labels
    }

    pub fn table(&self) -> &RingMatrix {
        &self.table
    }

    fn check_rows(&self, a: &[usize]) -> Result<(), Error> {
        match a.iter().find(|&&i| i >= self.table.rows()) {
            Some(&index) => Err(Error::IndexOutOfFamily { index, len: self.table.rows() }),
            None => Ok(()),
        }
    }

    /// `C_k(a, b)`: the minor on rows `a` and columns `b`.
    pub fn ctilde_k(&self, a: &[usize], b: &[usize]) -> Result<RationalFunction, Error> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        self.check_rows(a)?;
        if let Some(&index) = b.iter().find(|&&j| j >= self.table.cols()) {
            return Err(Error::IndexOutOfFamily { index, len: self.table.cols() });
        }
        self.table.submatrix(a, b).determinant()
    }

    /// `R_k(a)`: the sum of `C_k(a, b)` over strictly increasing `b`. Zero
    /// when `k` exceeds `|B|`.
    pub fn rtilde_k(&self, a: &[usize]) -> Result<RationalFunction, Error> {
        self.check_rows(a)?;
        let mut acc = RationalFunction::zero();
        for b in (0..self.table.cols()).combinations(a.len()) {
            acc = &acc + &self.table.submatrix(a, &b).determinant()?;
        }
        Ok(acc)
    }

    /// The skew matrix with upper entries `R_2(a_i, a_j)`.
    pub fn rtilde2_matrix(&self, a: &[usize]) -> Result<SkewMatrix, Error> {
        self.check_rows(a)?;
        let mut m = SkewMatrix::zeros(a.len());
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                m.set(i, j, self.rtilde_k(&[a[i], a[j]])?);
            }
        }
        Ok(m)
    }
}

fn require_even(a: &[usize]) -> Result<(), Error> {
    if a.len().is_multiple_of(2) {
        Ok(())
    } else {
        Err(Error::OddTuple(a.len()))
    }
}

/// Checks `R_k(a) = Pf(R_2(a_i, a_j))`, cross-checked by a second Pfaffian
/// algorithm and by the Pfaffian of `D M D^T`.
pub fn pfaffian_principle_check(fam: &MinorFamily, a: &[usize]) -> Result<CheckResult, Error> {
    require_even(a)?;
    let lhs = fam.rtilde_k(a)?;
    let r2 = fam.rtilde2_matrix(a)?;
    let rhs = pfaffian_recursive(&r2);
    let dmd = SkewMatrix::from_matrix(&dmd_construction(fam, a)?)?;
    Ok(CheckResult::new("det2pf", Identity::new("R_k(a) = Pf(R_2)", lhs.clone(), rhs.clone()))
        .with(Identity::new("Pf by matchings", pfaffian_matchings(&r2), rhs))
        .with(Identity::new("Pf(D M D^T) = R_k(a)", pfaffian_recursive(&dmd), lhs)))
}

/// `D M D^T` where `D[i][b] = C1(a_i, b)` and `M` is the all-ones skew
/// matrix on `B`.
pub fn dmd_construction(fam: &MinorFamily, a: &[usize]) -> Result<RingMatrix, Error> {
    fam.check_rows(a)?;
    let cols: Vec<usize> = (0..fam.table.cols()).collect();
    let d = fam.table.submatrix(a, &cols);
    let m = SkewMatrix::all_ones(cols.len()).to_matrix();
    d.mul(&m)?.mul(&d.transpose())
}

/// Checks `Pf(D M D^T) = sum_J Pf(M_J) det(D_J)` over `k`-subsets `J` of
/// the columns of the `k x m` matrix `D`.
pub fn minor_summation_check(d: &RingMatrix, m: &SkewMatrix) -> Result<CheckResult, Error> {
    let (k, cols) = (d.rows(), d.cols());
    if k % 2 == 1 {
        return Err(Error::OddTuple(k));
    }
    if cols != m.size() {
        return Err(Error::Shape(format!("D has {cols} columns but M has size {}", m.size())));
    }
    let prod = SkewMatrix::from_matrix(&d.mul(&m.to_matrix())?.mul(&d.transpose())?)?;
    let lhs = pfaffian_recursive(&prod);
    let rows: Vec<usize> = (0..k).collect();
    let mut rhs = RationalFunction::zero();
    for j in (0..cols).combinations(k) {
        let pf = pfaffian_recursive(&m.principal(&j));
        if pf.is_zero() {
            continue;
        }
        rhs = &rhs + &(&pf * &d.submatrix(&rows, &j).determinant()?);
    }
    Ok(CheckResult::new("minor-summation", Identity::new("Pf(D M D^T) = sum Pf(M_J) det(D_J)", lhs, rhs)))
}

/// Pfaffian of the all-ones skew matrix of size `n`.
pub fn allones_pfaffian(n: usize) -> RationalFunction {
    pfaffian_recursive(&SkewMatrix::all_ones(n))
}

pub fn random_integer_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> RingMatrix {
    RingMatrix::from_fn(rows, cols, |_, _| RationalFunction::from(rng.random_range(-bound..=bound)))
}

pub fn random_skew<R: Rng>(rng: &mut R, size: usize, bound: i64) -> SkewMatrix {
    SkewMatrix::from_upper(size, |_, _| RationalFunction::from(rng.random_range(-bound..=bound)))
}

pub fn random_family<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> MinorFamily {
    MinorFamily::from_table(random_integer_matrix(rng, rows, cols, bound))
}
