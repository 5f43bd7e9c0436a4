//! Small dense matrices and positive-semidefiniteness tests.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

/// Outcome of a positive-semidefiniteness test.
#[derive(Clone, Debug, PartialEq)]
pub enum PsdOutcome {
    Psd,
    /// Entry `(i, j)` differs from the conjugate of `(j, i)`.
    NotHermitian(usize, usize),
    /// A negative pivot, principal minor, or eigenvalue.
    Negative(Scalar),
}

impl PsdOutcome {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdOutcome::Psd)
    }
}

/// Exact PSD test for a rational matrix by symmetric Gaussian elimination
/// with diagonal pivoting: a symmetric matrix is PSD iff some diagonal entry
/// is positive and its Schur complement is PSD, or all diagonal entries are
/// zero together with every off-diagonal entry.
pub fn psd_exact(m: &Matrix<BigRational>) -> PsdOutcome {
    assert_eq!(m.rows, m.cols, "square matrix required");
    let n = m.rows;
    for i in 0..n {
        for j in i + 1..n {
            if m.get(i, j) != m.get(j, i) {
                return PsdOutcome::NotHermitian(i, j);
            }
        }
    }
    let mut work = m.clone();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // largest positive diagonal keeps entries small in practice
        let pivot = active
            .iter()
            .copied()
            .filter(|&p| work.get(p, p).is_positive())
            .max_by(|&a, &b| work.get(a, a).cmp(work.get(b, b)).then(b.cmp(&a)));
        let Some(p) = pivot else {
            if let Some(&q) = active.iter().find(|&&q| work.get(q, q).is_negative()) {
                return PsdOutcome::Negative(Scalar::Exact(work.get(q, q).clone()));
            }
            for (ai, &i) in active.iter().enumerate() {
                for &j in &active[ai + 1..] {
                    let v = work.get(i, j);
                    if !v.is_zero() {
                        // 2x2 principal minor [[0, v], [v, 0]]
                        return PsdOutcome::Negative(Scalar::Exact(-(v * v)));
                    }
                }
            }
            return PsdOutcome::Psd;
        };
        active.retain(|&q| q != p);
        let pivot_value = work.get(p, p).clone();
        let col: Vec<BigRational> = active.iter().map(|&i| work.get(i, p).clone()).collect();
        for (ai, &i) in active.iter().enumerate() {
            if col[ai].is_zero() {
                continue;
            }
            let factor = &col[ai] / &pivot_value;
            for (aj, &j) in active.iter().enumerate() {
                if col[aj].is_zero() {
                    continue;
                }
                let updated = work.get(i, j) - &factor * &col[aj];
                work.set(i, j, updated);
            }
        }
    }
    PsdOutcome::Psd
}

/// Hermitian-ness check followed by the smallest eigenvalue against `-tol`.
pub fn psd_approx(m: &Matrix<Complex64>, tol: f64) -> PsdOutcome {
    assert_eq!(m.rows, m.cols, "square matrix required");
    let n = m.rows;
    let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for i in 0..n {
        for j in i..n {
            if (m.get(i, j) - m.get(j, i).conj()).norm() > tol * scale {
                return PsdOutcome::NotHermitian(i, j);
            }
        }
    }
    let min = min_eigenvalue_hermitian(m);
    if min < -tol * scale {
        PsdOutcome::Negative(Scalar::real(min))
    } else {
        PsdOutcome::Psd
    }
}

/// Smallest eigenvalue of the Hermitian part of `m`.
pub fn min_eigenvalue_hermitian(m: &Matrix<Complex64>) -> f64 {
    let n = m.rows;
    if n == 0 {
        return 0.0;
    }
    let h = DMatrix::from_fn(n, n, |i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5);
    h.symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// PSD test dispatching on representation: exact when every entry is exact.
pub fn psd_scalar(m: &Matrix<Scalar>, tol: f64) -> PsdOutcome {
    if m.iter().all(Scalar::is_exact) {
        let exact = m.map(|s| s.as_exact().cloned().unwrap_or_default());
        psd_exact(&exact)
    } else {
        psd_approx(&m.map(Scalar::to_complex), tol)
    }
}

/// Rank of a matrix over the rationals.
pub fn rank_exact(m: &Matrix<BigRational>) -> usize {
    let mut rows: Vec<Vec<BigRational>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                for k in c..m.cols {
                    let v = &rows[r][k] - &factor * &rows[rank][k];
                    rows[r][k] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}
