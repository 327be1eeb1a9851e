//! Exact integer linear algebra on labelled matrices.
//!
//! Determinants, minors and rank all run fraction-free (Bareiss
//! elimination) over arbitrary-precision integers: every intermediate
//! value is an exact integer and every internal division is asserted to
//! be exact. The rational null space is computed over exact rationals
//! and can be reported with cleared denominators. No floating point
//! appears anywhere in this module.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

/// Errors from matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// Operand shapes do not fit the operation.
    #[error("dimension error: {0}")]
    Dimension(String),
}

/// Dense matrix of exact integers with row and column labels.
///
/// Rows are typically graph vertices and columns edges; the labels keep
/// that correspondence explicit when submatrices are extracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>, // row-major, rows * cols
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries and labels.
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<BigInt>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Dimension(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        if row_labels.len() != rows || col_labels.len() != cols {
            return Err(LinalgError::Dimension(format!(
                "label counts {}x{} do not match shape {}x{}",
                row_labels.len(),
                col_labels.len(),
                rows,
                cols
            )));
        }
        for labels in [&row_labels, &col_labels] {
            let set: BTreeSet<&String> = labels.iter().collect();
            if set.len() != labels.len() {
                return Err(LinalgError::Dimension("duplicate label".into()));
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
            row_labels,
            col_labels,
        })
    }

    /// Builds a matrix from a closure, with default labels `r1..`, `c1..`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
            row_labels: (1..=rows).map(|i| format!("r{i}")).collect(),
            col_labels: (1..=cols).map(|j| format!("c{j}")).collect(),
        }
    }

    /// Convenience constructor from machine-integer rows.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    ///
    /// The 0x0 determinant is 1 (empty product).
    pub fn det(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(det_raw(self.row_vecs()))
    }

    /// Determinant of the submatrix that survives deleting the given rows
    /// and columns (0-based, treated as sets).
    ///
    /// The empty (0x0) minor is 1, so formulas that delete everything
    /// degenerate consistently.
    pub fn minor(
        &self,
        deleted_rows: &[usize],
        deleted_cols: &[usize],
    ) -> Result<BigInt, LinalgError> {
        let dr: BTreeSet<usize> = deleted_rows.iter().copied().collect();
        let dc: BTreeSet<usize> = deleted_cols.iter().copied().collect();
        if dr.iter().any(|&r| r >= self.rows) || dc.iter().any(|&c| c >= self.cols) {
            return Err(LinalgError::Dimension("deleted index out of range".into()));
        }
        let keep_rows: Vec<usize> = (0..self.rows).filter(|r| !dr.contains(r)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|c| !dc.contains(c)).collect();
        if keep_rows.len() != keep_cols.len() {
            return Err(LinalgError::Dimension(format!(
                "surviving submatrix is {}x{}, not square",
                keep_rows.len(),
                keep_cols.len()
            )));
        }
        let sub: Vec<Vec<BigInt>> = keep_rows
            .iter()
            .map(|&r| keep_cols.iter().map(|&c| self.at(r, c).clone()).collect())
            .collect();
        Ok(det_raw(sub))
    }

    /// Exact rank over the rationals, by the same fraction-free
    /// elimination with column pivot search (lowest-index nonzero pivot).
    pub fn rank(&self) -> usize {
        let mut m = self.row_vecs();
        let mut r = 0usize;
        let mut prev = BigInt::one();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let t = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                    m[i][j] = exact_div(t, &prev);
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Basis of the rational null space.
    ///
    /// One vector per free column of the reduced row echelon form; the
    /// nullity is `cols() - rank()`.
    pub fn rational_kernel_basis(&self) -> Vec<RationalVector> {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| BigRational::from(self.at(r, c).clone()))
                    .collect()
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let pivot = m[r][c].clone();
            for j in c..self.cols {
                let t = &m[r][j] / &pivot;
                m[r][j] = t;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        let t = &f * &m[r][j];
                        m[i][j] = &m[i][j] - t;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::one();
            for &(pr, pc) in &pivots {
                v[pc] = -m[pr][f].clone();
            }
            basis.push(RationalVector::from_ratios(&v));
        }
        basis
    }

    /// Exact test of `A v = 0`.
    pub fn kernel_contains(&self, v: &[BigInt]) -> Result<bool, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "vector length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        for r in 0..self.rows {
            let mut sum = BigInt::zero();
            for c in 0..self.cols {
                let a = self.at(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    sum += a * &v[c];
                }
            }
            if !sum.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Submatrix made of the selected columns (all rows), keeping labels.
    pub fn column_submatrix(&self, cols: &[usize]) -> IntMatrix {
        let entries: Vec<BigInt> = (0..self.rows)
            .flat_map(|r| cols.iter().map(move |&c| self.at(r, c).clone()))
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
            row_labels: self.row_labels.clone(),
            col_labels: cols.iter().map(|&c| self.col_labels[c].clone()).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|c| strings.iter().map(|row| row[c].len()).max().unwrap_or(1))
            .collect();
        for row in &strings {
            write!(f, "[")?;
            for (c, s) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s:>width$}", width = widths[c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Fraction-free determinant of a square matrix given as rows.
fn det_raw(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = exact_div(t, &prev);
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Exact division; the Bareiss recurrence guarantees zero remainder.
fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "fraction-free elimination produced an inexact division"
    );
    q
}

/// gcd of the absolute values of the nonzero entries; zero for the zero vector.
pub fn gcd_of_entries(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    g
}

/// Flips the sign of the whole vector, if needed, so that the
/// lowest-indexed nonzero entry is positive.
pub fn canonical_sign(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Rational vector stored as integer numerators over one positive
/// common denominator, kept reduced (gcd of numerators and denominator
/// is 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector {
    numerators: Vec<BigInt>,
    denominator: BigInt,
}

impl RationalVector {
    pub fn new(numerators: Vec<BigInt>, denominator: BigInt) -> Self {
        assert!(denominator.is_positive(), "denominator must be positive");
        let mut v = Self {
            numerators,
            denominator,
        };
        v.reduce();
        v
    }

    pub fn from_ratios(v: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for x in v {
            den = den.lcm(x.denom());
        }
        let numerators = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Self::new(numerators, den)
    }

    /// Restores gcd(numerators, denominator) = 1.
    pub fn reduce(&mut self) {
        let mut g = self.denominator.clone();
        for x in &self.numerators {
            g = g.gcd(x);
        }
        if g > BigInt::one() {
            for x in &mut self.numerators {
                *x = &*x / &g;
            }
            self.denominator = &self.denominator / &g;
        }
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    /// The same direction with denominators cleared and entries divided
    /// by their gcd: the shortest integer vector on this line.
    pub fn integer_primitive(&self) -> Vec<BigInt> {
        let g = gcd_of_entries(&self.numerators);
        if g.is_zero() {
            return self.numerators.clone();
        }
        self.numerators.iter().map(|x| x / &g).collect()
    }
}
