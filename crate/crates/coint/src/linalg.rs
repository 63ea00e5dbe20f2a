//! Numerical kernels: dense matrices, least squares, and the generalized
//! symmetric eigenproblem behind reduced-rank regression.
//!
//! Least squares goes through a column-pivoted QR factorization rather than
//! the normal equations: macro regressors are often near-collinear and the
//! pivoted factorization both conditions the solve and detects rank
//! deficiency explicitly.

use crate::error::{CointError, Result};
use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

/// Dense row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub(crate) inner: DMatrix<f64>,
}

impl Matrix {
    /// Builds from row-major entries. Panics if the shape does not match or
    /// any entry is non-finite (finiteness is a construction invariant).
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<f64>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows*cols");
        assert!(entries.iter().all(|v| v.is_finite()), "matrix entries must be finite");
        Matrix { inner: DMatrix::from_row_slice(rows, cols, &entries) }
    }

    /// Builds from a slice of equal-length rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Matrix {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        let flat: Vec<f64> = rows
            .iter()
            .inspect(|r| assert_eq!(r.len(), cols, "ragged rows"))
            .flatten()
            .copied()
            .collect();
        Matrix::from_row_major(rows.len(), cols, flat)
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { inner: DMatrix::zeros(rows, cols) }
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix { inner: DMatrix::identity(n, n) }
    }

    pub(crate) fn from_na(inner: DMatrix<f64>) -> Matrix {
        Matrix { inner }
    }

    pub(crate) fn as_na(&self) -> &DMatrix<f64> {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    /// Entries in row-major order.
    pub fn data_row_major(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.inner[(i, j)]);
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.inner.column(j).iter().copied().collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix { inner: self.inner.transpose() }
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        Matrix { inner: &self.inner * &rhs.inner }
    }

    pub fn determinant(&self) -> f64 {
        assert_eq!(self.rows(), self.cols(), "determinant needs a square matrix");
        self.inner.determinant()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows(), cols: self.cols(), data: self.data_row_major() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Matrix, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        if r.data.len() != r.rows * r.cols {
            return Err(serde::de::Error::custom("matrix shape mismatch"));
        }
        Ok(Matrix { inner: DMatrix::from_row_slice(r.rows, r.cols, &r.data) })
    }
}

/// Ordinary least squares output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegressionFit {
    pub coefficients: Vec<f64>,
    pub stderr: Vec<f64>,
    pub t_stats: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Unbiased residual variance RSS/(n - p).
    pub sigma2: f64,
    /// Concentrated Gaussian log-likelihood -n/2 (ln 2π + 1 + ln(RSS/n)).
    pub loglik: f64,
    pub nobs: usize,
    pub nparams: usize,
}

impl RegressionFit {
    /// Fitted values implied by residuals and the observed response.
    pub fn fitted(&self, y: &[f64]) -> Vec<f64> {
        y.iter().zip(&self.residuals).map(|(yi, ri)| yi - ri).collect()
    }
}

/// Least-squares fit of `y` on the columns of `x` via column-pivoted QR.
///
/// Errors with `DegreesOfFreedom` when n <= p and `SingularDesign` when the
/// pivoted R factor reveals rank < p.
pub fn ols_fit(x: &Matrix, y: &[f64]) -> Result<RegressionFit> {
    let n = x.rows();
    let p = x.cols();
    assert_eq!(y.len(), n, "response length must match design rows");
    if n <= p {
        return Err(CointError::DegreesOfFreedom { nobs: n, nparams: p, context: "ols_fit" });
    }

    let qr = x.inner.clone().col_piv_qr();
    let r = qr.r();
    // Pivoting orders |r_ii| non-increasing, so r[0,0] bounds the scale.
    let scale = r[(0, 0)].abs();
    let tol = scale * (n.max(p) as f64) * f64::EPSILON;
    let rank = (0..p).filter(|&i| r[(i, i)].abs() > tol).count();
    if scale == 0.0 || rank < p {
        return Err(CointError::SingularDesign { rank, cols: p });
    }

    let yv = DVector::from_column_slice(y);
    let qty = qr.q().transpose() * &yv;
    let mut beta = r
        .solve_upper_triangular(&qty)
        .ok_or(CointError::SingularDesign { rank, cols: p })?;
    qr.p().inv_permute_rows(&mut beta);

    let fitted = &x.inner * &beta;
    let residuals: Vec<f64> = (0..n).map(|i| y[i] - fitted[i]).collect();
    let rss: f64 = residuals.iter().map(|e| e * e).sum();
    let sigma2 = rss / (n - p) as f64;

    // (X'X)^{-1} = P (R'R)^{-1} P' with X P = Q R.
    let rinv = r
        .solve_upper_triangular(&DMatrix::identity(p, p))
        .ok_or(CointError::SingularDesign { rank, cols: p })?;
    let mut cov = &rinv * rinv.transpose();
    qr.p().inv_permute_rows(&mut cov);
    qr.p().inv_permute_columns(&mut cov);

    let stderr: Vec<f64> = (0..p).map(|i| (sigma2 * cov[(i, i)]).max(0.0).sqrt()).collect();
    let t_stats: Vec<f64> = (0..p)
        .map(|i| if stderr[i] > 0.0 { beta[i] / stderr[i] } else { f64::NAN })
        .collect();
    let nf = n as f64;
    let loglik = -0.5 * nf * ((2.0 * std::f64::consts::PI).ln() + 1.0 + (rss / nf).ln());

    Ok(RegressionFit {
        coefficients: beta.iter().copied().collect(),
        stderr,
        t_stats,
        residuals,
        sigma2,
        loglik,
        nobs: n,
        nparams: p,
    })
}

/// Coefficient covariance matrix sigma2 * (X'X)^{-1} for a fitted design.
/// Used by joint hypothesis tests that need off-diagonal terms.
pub fn ols_coefficient_cov(x: &Matrix, sigma2: f64) -> Result<Matrix> {
    let p = x.cols();
    let qr = x.inner.clone().col_piv_qr();
    let r = qr.r();
    let scale = r[(0, 0)].abs();
    let tol = scale * (x.rows().max(p) as f64) * f64::EPSILON;
    let rank = (0..p).filter(|&i| r[(i, i)].abs() > tol).count();
    if scale == 0.0 || rank < p {
        return Err(CointError::SingularDesign { rank, cols: p });
    }
    let rinv = r
        .solve_upper_triangular(&DMatrix::identity(p, p))
        .ok_or(CointError::SingularDesign { rank, cols: p })?;
    let mut cov = &rinv * rinv.transpose();
    qr.p().inv_permute_rows(&mut cov);
    qr.p().inv_permute_columns(&mut cov);
    Ok(Matrix::from_na(cov * sigma2))
}

const SYMMETRY_TOL: f64 = 1e-9;

fn check_symmetric(m: &DMatrix<f64>, which: &'static str) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    let mut max_abs = 1.0f64;
    let mut max_asym = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            max_abs = max_abs.max(m[(i, j)].abs());
            if j > i {
                max_asym = max_asym.max((m[(i, j)] - m[(j, i)]).abs());
            }
        }
    }
    if max_asym > SYMMETRY_TOL * max_abs {
        return Err(CointError::NotSymmetric { which });
    }
    Ok((m + m.transpose()) * 0.5)
}

/// Solves the generalized symmetric eigenproblem A v = mu B v for symmetric
/// A and symmetric positive-definite B.
///
/// Returns eigenvalues sorted descending and eigenvectors as matching
/// columns, normalized to be B-orthonormal (v_i' B v_j = delta_ij).
///
/// The solve whitens with the Cholesky factor B = L L': the standard
/// symmetric eigenproblem for L^{-1} A L^{-T} has the same eigenvalues, and
/// mapping each eigenvector w back through v = L^{-T} w yields
/// B-orthonormality for free.
pub fn generalized_eigen(a: &Matrix, b: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let k = a.rows();
    assert!(a.cols() == k && b.rows() == k && b.cols() == k, "A and B must be square, same size");
    let a_sym = check_symmetric(&a.inner, "A")?;
    let b_sym = check_symmetric(&b.inner, "B")?;

    let chol = Cholesky::new(b_sym).ok_or(CointError::NotPD)?;
    let l = chol.l();
    let li_a = l.solve_lower_triangular(&a_sym).ok_or(CointError::NotPD)?;
    let m = l.solve_lower_triangular(&li_a.transpose()).ok_or(CointError::NotPD)?;
    let m = (&m + m.transpose()) * 0.5;

    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).unwrap());

    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut w_sorted = DMatrix::zeros(k, k);
    for (col, &i) in order.iter().enumerate() {
        w_sorted.set_column(col, &eig.eigenvectors.column(i));
    }
    let vectors = l
        .transpose()
        .solve_upper_triangular(&w_sorted)
        .ok_or(CointError::NotPD)?;
    Ok((values, Matrix::from_na(vectors)))
}
