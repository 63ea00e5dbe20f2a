//! Johansen maximum-likelihood cointegration analysis: reduced-rank
//! regression, eigenvalue extraction, trace and max-eigenvalue statistics,
//! embedded critical values and p-value grids, and the sequential rank
//! decision.
//!
//! The lag argument `k_var` is the order of the VAR in levels; the
//! underlying regressions use `k_var - 1` lagged differences and lose
//! `k_var` observations at the start of the sample.

mod tables;

use crate::error::{CointError, Result};
use crate::linalg::{generalized_eigen, Matrix};
use crate::series::Dataset;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Deterministic-term configuration, by the conventional case numbers:
/// 2 = constant restricted to the cointegrating relation, 3 = unrestricted
/// constant (the default), 4 = unrestricted constant plus a trend restricted
/// to the cointegrating relation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum DetCase {
    #[serde(rename = "restricted_constant")]
    RestrictedConstant,
    #[default]
    #[serde(rename = "unrestricted_constant")]
    UnrestrictedConstant,
    #[serde(rename = "restricted_trend")]
    RestrictedTrend,
}

impl DetCase {
    pub fn case_number(self) -> u8 {
        match self {
            DetCase::RestrictedConstant => 2,
            DetCase::UnrestrictedConstant => 3,
            DetCase::RestrictedTrend => 4,
        }
    }

    /// True when a deterministic column is appended to the lagged levels.
    fn augments_levels(self) -> bool {
        self != DetCase::UnrestrictedConstant
    }

    /// True when an unrestricted constant is projected out of both residual
    /// sets.
    fn has_unrestricted_constant(self) -> bool {
        self != DetCase::RestrictedConstant
    }
}


#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatisticKind {
    #[serde(rename = "trace")]
    Trace,
    #[serde(rename = "max_eig")]
    MaxEig,
}

/// Full test output. `beta` has one column per decided cointegrating
/// relation; in the restricted cases 2 and 4 it carries one extra row
/// holding the restricted deterministic coefficient.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JohansenResult {
    /// Descending eigenvalues, one per variable.
    pub eigenvalues: Vec<f64>,
    /// Effective sample size: observations entering the residual
    /// regressions after lag loss.
    pub t_effective: usize,
    /// Trace statistic for null rank r, r = 0..k-1.
    pub trace_stats: Vec<f64>,
    /// Max-eigenvalue statistic for null rank r.
    pub max_eig_stats: Vec<f64>,
    /// 5% critical values matching `trace_stats` row for row.
    pub trace_critical_values: Vec<f64>,
    pub max_eig_critical_values: Vec<f64>,
    pub trace_p_values: Vec<f64>,
    pub max_eig_p_values: Vec<f64>,
    /// Cointegrating vectors, first nonzero coordinate normalized to +1.
    pub beta: Matrix,
    /// Adjustment loadings, k x decided_rank.
    pub alpha: Matrix,
    /// Smallest r whose trace null is not rejected at 5%.
    pub decided_rank: usize,
    pub det_case: DetCase,
}

/// Residuals of every column of `m` on the column space of `d`, computed
/// through a pivoted QR so collinear columns in `d` cannot inflate the
/// projection.
fn project_out(m: &DMatrix<f64>, d: &DMatrix<f64>) -> DMatrix<f64> {
    if d.ncols() == 0 {
        return m.clone();
    }
    let qr = d.clone().col_piv_qr();
    let rr = qr.r();
    let tol = rr[(0, 0)].abs() * (d.nrows().max(d.ncols()) as f64) * f64::EPSILON;
    let rank = (0..rr.nrows().min(rr.ncols()))
        .take_while(|&i| rr[(i, i)].abs() > tol)
        .count();
    let q = qr.q();
    let qr_cols = q.columns(0, rank);
    m - qr_cols * (qr_cols.transpose() * m)
}

/// Reduced-rank regression stage shared by the test and the VECM fit.
/// Returns the moment matrices and the effective design pieces.
pub(crate) struct ReducedRank {
    pub(crate) eigenvalues: Vec<f64>,
    /// Eigenvectors column-normalized so the first nonzero coordinate is +1.
    pub(crate) beta_full: DMatrix<f64>,
    /// S01 * beta * (beta' S11 beta)^-1, columns matching `beta_full`.
    pub(crate) alpha_full: DMatrix<f64>,
    pub(crate) t_effective: usize,
}

/// Builds the residual moment matrices and solves the eigenproblem
/// det(mu S11 - S10 S00^-1 S01) = 0. In the restricted cases the levels
/// block is augmented by the deterministic column and the smallest of the
/// k+1 eigenvalues is dropped.
pub(crate) fn reduced_rank(ds: &Dataset, k_var: usize, det_case: DetCase) -> Result<ReducedRank> {
    assert!(k_var >= 1, "lag order must be at least 1");
    let cols = ds.columns();
    let k = cols.len();
    let n = cols[0].len();
    let aug = det_case.augments_levels() as usize;
    let k1 = k + aug;
    let n_lagdiff = (k_var - 1) * k;
    let d_cols = n_lagdiff + det_case.has_unrestricted_constant() as usize;
    if n <= k_var || n - k_var <= d_cols + k1 {
        return Err(CointError::DegreesOfFreedom {
            nobs: n.saturating_sub(k_var),
            nparams: d_cols + k1,
            context: "johansen_eigen",
        });
    }
    let t_eff = n - k_var;

    let mut z0 = DMatrix::zeros(t_eff, k);
    let mut z1 = DMatrix::zeros(t_eff, k1);
    let mut d = DMatrix::zeros(t_eff, d_cols);
    for (row, t) in (k_var..n).enumerate() {
        for (j, c) in cols.iter().enumerate() {
            z0[(row, j)] = c[t] - c[t - 1];
            z1[(row, j)] = c[t - 1];
        }
        match det_case {
            DetCase::RestrictedConstant => z1[(row, k)] = 1.0,
            DetCase::RestrictedTrend => z1[(row, k)] = (row + 1) as f64,
            DetCase::UnrestrictedConstant => {}
        }
        let mut col = 0;
        if det_case.has_unrestricted_constant() {
            d[(row, col)] = 1.0;
            col += 1;
        }
        for lag in 1..k_var {
            for c in cols.iter() {
                d[(row, col)] = c[t - lag] - c[t - lag - 1];
                col += 1;
            }
        }
    }

    let r0 = project_out(&z0, &d);
    let r1 = project_out(&z1, &d);
    let tf = t_eff as f64;
    let s00 = r0.transpose() * &r0 / tf;
    let s01 = r0.transpose() * &r1 / tf;
    let s11 = r1.transpose() * &r1 / tf;

    // A = S10 S00^-1 S01 formed as W'W with W = L^-1 S01 so it is
    // symmetric PSD by construction.
    let chol00 = s00
        .clone()
        .cholesky()
        .ok_or(CointError::SingularMoment { which: "S00" })?;
    let mut w = s01.clone();
    chol00.l().solve_lower_triangular_mut(&mut w);
    let a = w.transpose() * &w;

    let (mut mu, v) = generalized_eigen(&Matrix::from_na(a), &Matrix::from_na(s11.clone()))
        .map_err(|e| match e {
            CointError::NotPD => CointError::SingularMoment { which: "S11" },
            other => other,
        })?;
    for m in &mut mu {
        if *m < 0.0 && *m > -1e-8 {
            *m = 0.0;
        }
    }
    // restricted cases: the augmented problem has k+1 eigenvalues but only
    // k meaningful canonical correlations; drop the smallest.
    mu.truncate(k);
    let mut beta = v.as_na().columns(0, k).into_owned();

    let mut alpha = {
        let bsb = beta.transpose() * &s11 * &beta;
        let inv = bsb
            .try_inverse()
            .ok_or(CointError::SingularMoment { which: "beta' S11 beta" })?;
        &s01 * &beta * inv
    };
    normalize_columns(&mut beta, &mut alpha);

    Ok(ReducedRank {
        eigenvalues: mu,
        beta_full: beta,
        alpha_full: alpha,
        t_effective: t_eff,
    })
}

/// Scales each beta column so its first nonzero coordinate is +1, rescaling
/// the matching alpha column to keep alpha * beta' unchanged.
fn normalize_columns(beta: &mut DMatrix<f64>, alpha: &mut DMatrix<f64>) {
    for j in 0..beta.ncols() {
        let col_max = (0..beta.nrows()).fold(0.0f64, |m, i| m.max(beta[(i, j)].abs()));
        if col_max == 0.0 {
            continue;
        }
        let pivot = (0..beta.nrows())
            .map(|i| beta[(i, j)])
            .find(|v| v.abs() > 1e-10 * col_max)
            .unwrap();
        for i in 0..beta.nrows() {
            beta[(i, j)] /= pivot;
        }
        for i in 0..alpha.nrows() {
            alpha[(i, j)] *= pivot;
        }
    }
}

/// Eigenvalue extraction: returns (eigenvalues, beta, alpha, T) with beta
/// and alpha carrying all k columns (normalization as in the result type).
pub fn johansen_eigen(
    ds: &Dataset,
    k_var: usize,
    det_case: DetCase,
) -> Result<(Vec<f64>, Matrix, Matrix, usize)> {
    let rr = reduced_rank(ds, k_var, det_case)?;
    Ok((
        rr.eigenvalues,
        Matrix::from_na(rr.beta_full),
        Matrix::from_na(rr.alpha_full),
        rr.t_effective,
    ))
}

fn check_eigenvalue(mu: f64) -> Result<f64> {
    if !(-1e-12..1.0).contains(&mu) {
        return Err(CointError::EigenvalueDomain { value: mu });
    }
    Ok(mu.max(0.0))
}

/// Trace statistic -T sum_{i=r+1..k} ln(1 - mu_i) for null rank r.
pub fn trace_statistic(eigenvalues: &[f64], t: usize, r: usize) -> Result<f64> {
    assert!(r < eigenvalues.len(), "null rank must be below the variable count");
    let mut sum = 0.0;
    for &mu in &eigenvalues[r..] {
        sum += (1.0 - check_eigenvalue(mu)?).ln();
    }
    Ok(-(t as f64) * sum)
}

/// Max-eigenvalue statistic -T ln(1 - mu_{r+1}) for null rank r.
pub fn max_eigen_statistic(eigenvalues: &[f64], t: usize, r: usize) -> Result<f64> {
    assert!(r < eigenvalues.len(), "null rank must be below the variable count");
    Ok(-(t as f64) * (1.0 - check_eigenvalue(eigenvalues[r])?).ln())
}

fn cv_table(kind: StatisticKind, det_case: DetCase) -> &'static [f64; 6] {
    match (kind, det_case) {
        (StatisticKind::Trace, DetCase::RestrictedConstant) => &tables::TRACE_CV5_CASE2,
        (StatisticKind::Trace, DetCase::UnrestrictedConstant) => &tables::TRACE_CV5_CASE3,
        (StatisticKind::Trace, DetCase::RestrictedTrend) => &tables::TRACE_CV5_CASE4,
        (StatisticKind::MaxEig, DetCase::RestrictedConstant) => &tables::MAX_EIG_CV5_CASE2,
        (StatisticKind::MaxEig, DetCase::UnrestrictedConstant) => &tables::MAX_EIG_CV5_CASE3,
        (StatisticKind::MaxEig, DetCase::RestrictedTrend) => &tables::MAX_EIG_CV5_CASE4,
    }
}

fn quantile_grid(kind: StatisticKind, det_case: DetCase) -> &'static [[f64; 28]; 6] {
    match (kind, det_case) {
        (StatisticKind::Trace, DetCase::RestrictedConstant) => &tables::TRACE_GRID_CASE2,
        (StatisticKind::Trace, DetCase::UnrestrictedConstant) => &tables::TRACE_GRID_CASE3,
        (StatisticKind::Trace, DetCase::RestrictedTrend) => &tables::TRACE_GRID_CASE4,
        (StatisticKind::MaxEig, DetCase::RestrictedConstant) => &tables::MAX_EIG_GRID_CASE2,
        (StatisticKind::MaxEig, DetCase::UnrestrictedConstant) => &tables::MAX_EIG_GRID_CASE3,
        (StatisticKind::MaxEig, DetCase::RestrictedTrend) => &tables::MAX_EIG_GRID_CASE4,
    }
}

/// Embedded 5% critical value for k_minus_r = 1..6. Only the 5% level is
/// tabulated; `level` is the tail probability (0.05).
pub fn johansen_critical_value(
    kind: StatisticKind,
    k_minus_r: usize,
    det_case: DetCase,
    level: f64,
) -> Result<f64> {
    if (level - 0.05).abs() > 1e-12 {
        return Err(CointError::TableRange {
            what: format!("significance level {level}; only 0.05 is tabulated"),
        });
    }
    if !(1..=6).contains(&k_minus_r) {
        return Err(CointError::TableRange {
            what: format!("k - r = {k_minus_r}; tables cover 1..=6"),
        });
    }
    Ok(cv_table(kind, det_case)[k_minus_r - 1])
}

/// Upper-tail probability by log-linear interpolation of the embedded
/// percentile grid. Because the 5% column is pinned to the published
/// critical values, a statistic exactly at its critical value maps to
/// p = 0.05. The walk always brackets the statistic with a
/// positive-width segment, so repeated grid entries (possible after
/// rounding in the far tail) cannot divide by zero.
fn grid_p_value(stat: f64, grid: &[f64; 28]) -> f64 {
    let p = &tables::PGRID;
    let n = grid.len();
    if stat <= 0.0 {
        return 1.0;
    }
    if stat <= grid[0] {
        // anchor at (0, 1): every statistic is nonnegative
        let slope = p[0].ln() / grid[0];
        return (slope * stat).exp().min(1.0);
    }
    if stat >= grid[n - 1] {
        let mut j = n - 2;
        while j > 0 && grid[j] >= grid[n - 1] {
            j -= 1;
        }
        if grid[j] >= grid[n - 1] {
            return p[n - 1];
        }
        let slope = (p[n - 1].ln() - p[j].ln()) / (grid[n - 1] - grid[j]);
        return (p[n - 1].ln() + slope * (stat - grid[n - 1])).exp().clamp(0.0, 1.0);
    }
    let mut i = 0;
    while grid[i + 1] < stat {
        i += 1;
    }
    // grid[i] < stat <= grid[i+1], so the segment has positive width
    let frac = (stat - grid[i]) / (grid[i + 1] - grid[i]);
    (p[i].ln() + frac * (p[i + 1].ln() - p[i].ln())).exp()
}

/// Upper-tail p-value for an observed statistic. For the unrestricted-
/// constant case with k_minus_r = 1 the asymptotic null is exactly
/// chi-square(1); every other combination interpolates the embedded grid.
pub fn johansen_p_value(
    kind: StatisticKind,
    stat: f64,
    k_minus_r: usize,
    det_case: DetCase,
) -> Result<f64> {
    if !(1..=6).contains(&k_minus_r) {
        return Err(CointError::TableRange {
            what: format!("k - r = {k_minus_r}; tables cover 1..=6"),
        });
    }
    if det_case == DetCase::UnrestrictedConstant && k_minus_r == 1 {
        return Ok(crate::dist::chi_square_sf(stat.max(0.0), 1));
    }
    Ok(grid_p_value(stat, &quantile_grid(kind, det_case)[k_minus_r - 1]))
}

/// Sequential rank decision: smallest r with statistic <= critical value,
/// or k when every null is rejected.
pub fn decide_rank(stats: &[f64], critical_values: &[f64]) -> usize {
    assert_eq!(stats.len(), critical_values.len());
    stats
        .iter()
        .zip(critical_values)
        .position(|(s, cv)| s <= cv)
        .unwrap_or(stats.len())
}

/// Runs the full procedure: eigenvalues, both statistic sequences with 5%
/// critical values and p-values, the sequential trace decision, and the
/// normalized beta / alpha truncated to the decided rank.
pub fn johansen_test(ds: &Dataset, k_var: usize, det_case: DetCase) -> Result<JohansenResult> {
    let k = ds.k();
    if k > 6 {
        return Err(CointError::TableRange {
            what: format!("{k} variables; critical values cover k - r <= 6"),
        });
    }
    let rr = reduced_rank(ds, k_var, det_case)?;
    let t = rr.t_effective;

    let mut trace_stats = Vec::with_capacity(k);
    let mut max_eig_stats = Vec::with_capacity(k);
    let mut trace_cv = Vec::with_capacity(k);
    let mut max_cv = Vec::with_capacity(k);
    let mut trace_p = Vec::with_capacity(k);
    let mut max_p = Vec::with_capacity(k);
    for r in 0..k {
        let d = k - r;
        let ts = trace_statistic(&rr.eigenvalues, t, r)?;
        let ms = max_eigen_statistic(&rr.eigenvalues, t, r)?;
        trace_cv.push(johansen_critical_value(StatisticKind::Trace, d, det_case, 0.05)?);
        max_cv.push(johansen_critical_value(StatisticKind::MaxEig, d, det_case, 0.05)?);
        trace_p.push(johansen_p_value(StatisticKind::Trace, ts, d, det_case)?);
        max_p.push(johansen_p_value(StatisticKind::MaxEig, ms, d, det_case)?);
        trace_stats.push(ts);
        max_eig_stats.push(ms);
    }
    let rank = decide_rank(&trace_stats, &trace_cv);
    let keep = rank.min(rr.beta_full.ncols());
    let beta = rr.beta_full.columns(0, keep).into_owned();
    let alpha = rr.alpha_full.columns(0, keep).into_owned();

    Ok(JohansenResult {
        eigenvalues: rr.eigenvalues,
        t_effective: t,
        trace_stats,
        max_eig_stats,
        trace_critical_values: trace_cv,
        max_eig_critical_values: max_cv,
        trace_p_values: trace_p,
        max_eig_p_values: max_p,
        beta: Matrix::from_na(beta),
        alpha: Matrix::from_na(alpha),
        decided_rank: rank,
        det_case,
    })
}
