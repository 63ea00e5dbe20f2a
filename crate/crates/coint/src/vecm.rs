//! Vector error-correction estimation and Granger-style causality tests.
//!
//! Each equation regresses a variable's first difference on an intercept,
//! `k_var - 1` lagged differences of every variable, and the lagged
//! equilibrium error ECT_{t-1} built from the dominant cointegrating
//! vector. The ECT coefficient (the adjustment speed) carries the long-run
//! channel; joint Wald tests on a source variable's lagged-difference block
//! carry the short-run channel.

use crate::dist::chi_square_sf;
use crate::error::{CointError, Result};
use crate::johansen::{reduced_rank, DetCase};
use crate::linalg::{ols_coefficient_cov, ols_fit, Matrix, RegressionFit};
use crate::series::Dataset;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Estimated equation for one variable's first difference.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VecmEquation {
    pub target: String,
    pub intercept: f64,
    pub intercept_stderr: f64,
    pub intercept_tstat: f64,
    /// Lagged-difference coefficients, row = lag - 1, column = variable.
    pub short_run: Matrix,
    pub short_run_stderr: Matrix,
    pub short_run_tstats: Matrix,
    /// Adjustment speed on ECT_{t-1}.
    pub ect_coeff: f64,
    pub ect_tstat: f64,
    pub sigma2: f64,
}

/// Fitted system. `beta` is the normalized dominant cointegrating vector;
/// in the restricted deterministic cases it carries one extra trailing
/// entry for the restricted constant or trend.
#[derive(Debug, Clone)]
pub struct VecmFit {
    pub rank: usize,
    pub lag_diffs: usize,
    pub det_case: DetCase,
    pub variable_names: Vec<String>,
    pub beta: Vec<f64>,
    pub equations: Vec<VecmEquation>,
    /// ECT_{t-1} per regression observation.
    pub ect_series: Vec<f64>,
    /// Effective-sample residuals, one column per equation.
    pub residuals: Matrix,
    pub nobs: usize,
    /// Shared regressor matrix [1 | lagged differences | ECT_{t-1}].
    pub(crate) design: Matrix,
    pub(crate) fits: Vec<RegressionFit>,
}

/// Joint exclusion test on one source variable's lagged differences in one
/// target equation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WaldResult {
    pub chi_square: f64,
    pub df: usize,
    pub p_value: f64,
    pub target_equation: String,
    pub excluded_block: Vec<String>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LongRunCausality {
    pub significant: bool,
    pub lambda: f64,
    pub tstat: f64,
}

/// Long-run significance rule: the adjustment coefficient must be negative
/// (pulling back toward equilibrium) and significant at the two-sided 5%
/// normal point.
pub fn long_run_significant(lambda: f64, tstat: f64) -> bool {
    lambda < 0.0 && tstat.abs() > 1.96
}

/// Equilibrium error beta' z for one augmented level vector.
fn ect_value(beta: &[f64], z: &[f64]) -> f64 {
    debug_assert_eq!(beta.len(), z.len());
    beta.iter().zip(z).map(|(b, v)| b * v).sum()
}

/// Estimates the VECM at cointegrating rank `r` (only the dominant vector
/// enters the ECT) with `k_var - 1` lagged differences.
pub fn fit_vecm(ds: &Dataset, r: usize, k_var: usize, det_case: DetCase) -> Result<VecmFit> {
    if r == 0 {
        return Err(CointError::NoCointegration);
    }
    let cols = ds.columns();
    let k = cols.len();
    let n = cols[0].len();
    if r > k {
        return Err(CointError::Config {
            message: format!("cointegrating rank {r} exceeds the {k} variables"),
        });
    }
    let rr = reduced_rank(ds, k_var, det_case)?;
    let beta: Vec<f64> = (0..rr.beta_full.nrows()).map(|i| rr.beta_full[(i, 0)]).collect();
    let lag_diffs = k_var - 1;
    let t_eff = n - k_var;

    // regression rows are t = k_var..n-1; the ECT uses the same augmented
    // lagged-levels vector the eigenproblem saw, so the restricted trend
    // origin matches the Johansen stage
    let mut rows = Vec::with_capacity(t_eff);
    let mut targets = vec![Vec::with_capacity(t_eff); k];
    let mut ect_series = Vec::with_capacity(t_eff);
    for (row, t) in (k_var..n).enumerate() {
        let mut z = Vec::with_capacity(beta.len());
        for c in &cols {
            z.push(c[t - 1]);
        }
        match det_case {
            DetCase::RestrictedConstant => z.push(1.0),
            DetCase::RestrictedTrend => z.push((row + 1) as f64),
            DetCase::UnrestrictedConstant => {}
        }
        let ect = ect_value(&beta, &z);
        ect_series.push(ect);

        let mut x = Vec::with_capacity(2 + lag_diffs * k);
        x.push(1.0);
        for lag in 1..=lag_diffs {
            for c in &cols {
                x.push(c[t - lag] - c[t - lag - 1]);
            }
        }
        x.push(ect);
        rows.push(x);
        for (i, c) in cols.iter().enumerate() {
            targets[i].push(c[t] - c[t - 1]);
        }
    }
    let design = Matrix::from_rows(&rows);
    let ect_idx = 1 + lag_diffs * k;

    let mut fits = Vec::with_capacity(k);
    let mut resid = DMatrix::zeros(t_eff, k);
    let mut equations = Vec::with_capacity(k);
    for (i, y) in targets.iter().enumerate() {
        let fit = ols_fit(&design, y)?;
        for (t, e) in fit.residuals.iter().enumerate() {
            resid[(t, i)] = *e;
        }
        let grab = |f: &dyn Fn(usize) -> f64| {
            let mut m = DMatrix::zeros(lag_diffs, k);
            for lag in 0..lag_diffs {
                for j in 0..k {
                    m[(lag, j)] = f(1 + lag * k + j);
                }
            }
            Matrix::from_na(m)
        };
        equations.push(VecmEquation {
            target: ds.names()[i].to_string(),
            intercept: fit.coefficients[0],
            intercept_stderr: fit.stderr[0],
            intercept_tstat: fit.t_stats[0],
            short_run: grab(&|idx| fit.coefficients[idx]),
            short_run_stderr: grab(&|idx| fit.stderr[idx]),
            short_run_tstats: grab(&|idx| fit.t_stats[idx]),
            ect_coeff: fit.coefficients[ect_idx],
            ect_tstat: fit.t_stats[ect_idx],
            sigma2: fit.sigma2,
        });
        fits.push(fit);
    }

    Ok(VecmFit {
        rank: r,
        lag_diffs,
        det_case,
        variable_names: ds.names().iter().map(|s| s.to_string()).collect(),
        beta,
        equations,
        ect_series,
        residuals: Matrix::from_na(resid),
        nobs: t_eff,
        design,
        fits,
    })
}

impl VecmFit {
    fn equation_index(&self, name: &str) -> Result<usize> {
        self.variable_names
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| CointError::Config {
                message: format!("unknown variable '{name}'"),
            })
    }
}

/// Reports the long-run channel for one equation: adjustment speed, its
/// t-statistic, and the significance rule.
pub fn long_run_causality(fit: &VecmFit, equation: &str) -> Result<LongRunCausality> {
    let i = fit.equation_index(equation)?;
    let eq = &fit.equations[i];
    Ok(LongRunCausality {
        significant: long_run_significant(eq.ect_coeff, eq.ect_tstat),
        lambda: eq.ect_coeff,
        tstat: eq.ect_tstat,
    })
}

/// Wald quadratic form b' V^-1 b. A zero coefficient block short-circuits
/// to 0 so a borderline covariance cannot manufacture a spurious statistic.
fn wald_quadform(rb: &[f64], subcov: &DMatrix<f64>) -> Result<f64> {
    if rb.iter().all(|v| *v == 0.0) {
        return Ok(0.0);
    }
    let inv = subcov.clone().try_inverse().ok_or(CointError::SingularMoment {
        which: "restricted coefficient covariance",
    })?;
    let b = DMatrix::from_column_slice(rb.len(), 1, rb);
    Ok((b.transpose() * inv * &b)[(0, 0)])
}

/// Joint test that every lagged difference of `source_variable` can be
/// excluded from the `target_equation` regression.
pub fn wald_short_run(fit: &VecmFit, target_equation: &str, source_variable: &str) -> Result<WaldResult> {
    if fit.lag_diffs == 0 {
        return Err(CointError::NothingToTest);
    }
    let i = fit.equation_index(target_equation)?;
    let j = fit.equation_index(source_variable)?;
    let k = fit.variable_names.len();
    let idx: Vec<usize> = (0..fit.lag_diffs).map(|lag| 1 + lag * k + j).collect();

    let cov = ols_coefficient_cov(&fit.design, fit.fits[i].sigma2)?;
    let rb: Vec<f64> = idx.iter().map(|&c| fit.fits[i].coefficients[c]).collect();
    let mut sub = DMatrix::zeros(idx.len(), idx.len());
    for (a, &ca) in idx.iter().enumerate() {
        for (b, &cb) in idx.iter().enumerate() {
            sub[(a, b)] = cov.get(ca, cb);
        }
    }
    let chi_square = wald_quadform(&rb, &sub)?;
    let df = idx.len();
    Ok(WaldResult {
        chi_square,
        df,
        p_value: chi_square_sf(chi_square.max(0.0), df),
        target_equation: target_equation.to_string(),
        excluded_block: (1..=fit.lag_diffs)
            .map(|lag| format!("d_{source_variable}_lag{lag}"))
            .collect(),
    })
}

/// Short-run exclusion tests for every ordered (source, target) pair,
/// grouped by target equation: k(k-1) results.
pub fn causality_matrix(fit: &VecmFit) -> Result<Vec<WaldResult>> {
    let mut out = Vec::new();
    let names = fit.variable_names.clone();
    for target in &names {
        for source in &names {
            if source != target {
                out.push(wald_short_run(fit, target, source)?);
            }
        }
    }
    Ok(out)
}
