//! Unrestricted VAR estimation (constant-only deterministics) and the
//! lag-order selection table with LR, FPE, AIC, SC, and HQ criteria.
//!
//! Conventions, with k variables, lag order p, effective sample T, and
//! n = k(kp + 1) total estimated coefficients:
//!   AIC = ln|S| + 2n/T
//!   SC  = ln|S| + n ln(T)/T
//!   HQ  = ln|S| + 2n ln(ln T)/T
//!   FPE = ((T + kp + 1)/(T - kp - 1))^k |S|
//!   LR(p) = (T - m)(ln|S_{p-1}| - ln|S_p|), m = kp + 1 regressors per
//!           equation under the alternative, tested against chi-square(k^2)
//! where S is the maximum-likelihood residual covariance E'E/T. The LR star
//! marks the largest lag whose sequential test rejects at 5%; the other
//! stars mark the minimizing lag.

use crate::dist::chi_square_sf;
use crate::error::{CointError, Result};
use crate::linalg::{ols_fit, Matrix};
use crate::series::Dataset;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Fitted vector autoregression y_t = c + A_1 y_{t-1} + ... + A_p y_{t-p} + e_t.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VarFit {
    pub lag_order: usize,
    /// Per-lag k x k coefficient matrices; entry (i, j) is the loading of
    /// equation i on variable j.
    pub coef_lags: Vec<Matrix>,
    /// Intercept per equation.
    pub intercept: Vec<f64>,
    /// Maximum-likelihood residual covariance E'E/T.
    pub residual_cov: Matrix,
    /// Effective observations T after losing `lag_order` at the start.
    pub nobs: usize,
    /// Gaussian log-likelihood -T/2 (k ln 2pi + ln|S| + k).
    pub loglik: f64,
    /// T x k residual matrix.
    pub residuals: Matrix,
}

/// One row of the selection table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LagRow {
    pub lag: usize,
    pub loglik: f64,
    /// Sequential modified LR statistic; absent at lag 0.
    pub lr: Option<f64>,
    pub fpe: f64,
    pub aic: f64,
    pub sc: f64,
    pub hq: f64,
}

/// Selected lag per criterion. `lr` is absent when no lag rejects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarredLags {
    pub lr: Option<usize>,
    pub fpe: usize,
    pub aic: usize,
    pub sc: usize,
    pub hq: usize,
}

/// Lag-order table over 0..=max_p, all rows on the common sample.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LagSelectionTable {
    pub rows: Vec<LagRow>,
    pub starred: StarredLags,
    /// Effective sample shared by every row.
    pub nobs: usize,
}

impl LagSelectionTable {
    /// Applies the starring rule to precomputed rows (k is the variable
    /// count, needed for the chi-square(k^2) reference of the LR test).
    pub fn star(rows: Vec<LagRow>, k: usize, nobs: usize) -> LagSelectionTable {
        let argmin = |f: &dyn Fn(&LagRow) -> f64| {
            rows.iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| f(a).partial_cmp(&f(b)).unwrap())
                .map(|(i, _)| rows[i].lag)
                .unwrap()
        };
        let mut lr_star = None;
        for row in &rows {
            if let Some(stat) = row.lr {
                if chi_square_sf(stat.max(0.0), k * k) < 0.05 {
                    lr_star = Some(row.lag);
                }
            }
        }
        let starred = StarredLags {
            lr: lr_star,
            fpe: argmin(&|r: &LagRow| r.fpe),
            aic: argmin(&|r: &LagRow| r.aic),
            sc: argmin(&|r: &LagRow| r.sc),
            hq: argmin(&|r: &LagRow| r.hq),
        };
        LagSelectionTable { rows, starred, nobs }
    }
}

/// Builds the shared design [1, y_{t-1}, ..., y_{t-p}] over effective
/// observations starting at index `start` >= p.
fn var_design(cols: &[Vec<f64>], p: usize, start: usize) -> (Matrix, Vec<Vec<f64>>) {
    let k = cols.len();
    let n = cols[0].len();
    let t_eff = n - start;
    let mut rows = Vec::with_capacity(t_eff);
    let mut targets = vec![Vec::with_capacity(t_eff); k];
    for t in start..n {
        let mut row = Vec::with_capacity(1 + k * p);
        row.push(1.0);
        for j in 1..=p {
            for c in cols {
                row.push(c[t - j]);
            }
        }
        rows.push(row);
        for (i, c) in cols.iter().enumerate() {
            targets[i].push(c[t]);
        }
    }
    (Matrix::from_rows(&rows), targets)
}

/// Equation-by-equation OLS fit on the common design, returning residuals
/// and the ML residual covariance.
fn fit_var_at(cols: &[Vec<f64>], p: usize, start: usize) -> Result<(Vec<crate::linalg::RegressionFit>, DMatrix<f64>, DMatrix<f64>)> {
    let k = cols.len();
    let (x, targets) = var_design(cols, p, start);
    let t_eff = x.rows();
    let mut fits = Vec::with_capacity(k);
    let mut resid = DMatrix::zeros(t_eff, k);
    for (i, y) in targets.iter().enumerate() {
        let fit = ols_fit(&x, y)?;
        for (t, e) in fit.residuals.iter().enumerate() {
            resid[(t, i)] = *e;
        }
        fits.push(fit);
    }
    let cov = resid.transpose() * &resid / t_eff as f64;
    Ok((fits, resid, cov))
}

/// Fits a constant-only VAR(p). With p = 0 the fit is deterministic-only
/// and the residual covariance reduces to the sample covariance about the
/// mean (ML divisor).
pub fn fit_var(ds: &Dataset, p: usize) -> Result<VarFit> {
    let cols = ds.columns();
    let k = cols.len();
    let n = cols[0].len();
    if n <= p || n - p <= k * p + 1 {
        return Err(CointError::DegreesOfFreedom {
            nobs: n.saturating_sub(p),
            nparams: k * p + 1,
            context: "fit_var",
        });
    }
    let (fits, resid, cov) = fit_var_at(&cols, p, p)?;
    let t_eff = n - p;

    let mut coef_lags = Vec::with_capacity(p);
    for j in 0..p {
        let mut m = DMatrix::zeros(k, k);
        for i in 0..k {
            for v in 0..k {
                m[(i, v)] = fits[i].coefficients[1 + j * k + v];
            }
        }
        coef_lags.push(Matrix::from_na(m));
    }
    let intercept: Vec<f64> = fits.iter().map(|f| f.coefficients[0]).collect();
    let loglik = var_loglik(t_eff, k, &cov)?;
    Ok(VarFit {
        lag_order: p,
        coef_lags,
        intercept,
        residual_cov: Matrix::from_na(cov),
        nobs: t_eff,
        loglik,
        residuals: Matrix::from_na(resid),
    })
}

fn var_loglik(t_eff: usize, k: usize, cov: &DMatrix<f64>) -> Result<f64> {
    let det = cov.determinant();
    if det.is_nan() || det <= 0.0 {
        return Err(CointError::SingularMoment { which: "residual covariance" });
    }
    let tf = t_eff as f64;
    let kf = k as f64;
    Ok(-0.5 * tf * (kf * (2.0 * std::f64::consts::PI).ln() + det.ln() + kf))
}

/// Computes the selection table for lags 0..=max_p. Every candidate is fit
/// on the sample implied by max_p so the criteria are comparable.
pub fn lag_order_table(ds: &Dataset, max_p: usize) -> Result<LagSelectionTable> {
    let cols = ds.columns();
    let k = cols.len();
    let n = cols[0].len();
    if n <= max_p || n - max_p <= k * max_p + 1 {
        return Err(CointError::DegreesOfFreedom {
            nobs: n.saturating_sub(max_p),
            nparams: k * max_p + 1,
            context: "lag_order_table",
        });
    }
    let t_eff = n - max_p;
    let tf = t_eff as f64;
    let kf = k as f64;

    let mut rows = Vec::with_capacity(max_p + 1);
    let mut prev_lndet: Option<f64> = None;
    for p in 0..=max_p {
        let (_, _, cov) = fit_var_at(&cols, p, max_p)?;
        let det = cov.determinant();
        if det.is_nan() || det <= 0.0 {
            return Err(CointError::SingularMoment { which: "residual covariance" });
        }
        let lndet = det.ln();
        let n_coef = kf * (kf * p as f64 + 1.0);
        let m = kf * p as f64 + 1.0; // regressors per equation
        let loglik = var_loglik(t_eff, k, &cov)?;
        let lr = prev_lndet.map(|prev| (tf - m) * (prev - lndet));
        rows.push(LagRow {
            lag: p,
            loglik,
            lr,
            fpe: ((tf + m) / (tf - m)).powi(k as i32) * det,
            aic: lndet + 2.0 * n_coef / tf,
            sc: lndet + n_coef * tf.ln() / tf,
            hq: lndet + 2.0 * n_coef * tf.ln().ln() / tf,
        });
        prev_lndet = Some(lndet);
    }
    Ok(LagSelectionTable::star(rows, k, t_eff))
}
