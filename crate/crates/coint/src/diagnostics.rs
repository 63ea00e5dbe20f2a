//! Residual diagnostics: Jarque-Bera normality from sample moments and the
//! Breusch-Godfrey LM test for serial correlation.
//!
//! Skewness and kurtosis use 1/n moment divisors and kurtosis is the raw
//! fourth-moment ratio (3 for a normal sample, not 0), so
//! JB = n (S^2/6 + (K-3)^2/24) reproduces published tables computed the
//! same way. The descriptive standard deviation uses the n-1 divisor.

use crate::dist::chi_square_sf;
use crate::error::{CointError, Result};
use crate::linalg::{ols_fit, Matrix};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormalityReport {
    pub mean: f64,
    pub median: f64,
    pub max: f64,
    pub min: f64,
    pub std_dev: f64,
    pub skewness: f64,
    pub kurtosis: f64,
    pub jarque_bera: f64,
    pub p_value: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SerialCorrelationTest {
    pub lm_stat: f64,
    pub f_stat: f64,
    /// Upper chi-square(h) tail of the LM statistic.
    pub p_value: f64,
    pub lags: usize,
}

/// JB statistic and its chi-square(2) p-value from precomputed moment
/// ratios, so published tables can be checked without the raw sample.
pub fn jb_from_moments(skewness: f64, kurtosis: f64, n: usize) -> (f64, f64) {
    let jb = n as f64 * (skewness * skewness / 6.0 + (kurtosis - 3.0).powi(2) / 24.0);
    (jb, chi_square_sf(jb, 2))
}

/// Full normality report for a sample of at least 8 observations.
pub fn jarque_bera(x: &[f64]) -> Result<NormalityReport> {
    let n = x.len();
    if n < 8 {
        return Err(CointError::SampleTooSmall { nobs: n, min: 8 });
    }
    let nf = n as f64;
    let mean = x.iter().sum::<f64>() / nf;
    let m = |p: i32| x.iter().map(|v| (v - mean).powi(p)).sum::<f64>() / nf;
    let m2 = m(2);
    if m2 <= 0.0 {
        return Err(CointError::ZeroVariance { context: "normality sample" });
    }
    let skewness = m(3) / m2.powf(1.5);
    let kurtosis = m(4) / (m2 * m2);
    let (jarque_bera, p_value) = jb_from_moments(skewness, kurtosis, n);

    let mut sorted = x.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    };
    Ok(NormalityReport {
        mean,
        median,
        max: sorted[n - 1],
        min: sorted[0],
        std_dev: (x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (nf - 1.0)).sqrt(),
        skewness,
        kurtosis,
        jarque_bera,
        p_value,
    })
}

/// Breusch-Godfrey serial-correlation test: regress the residuals on the
/// original design plus `h` lagged residuals (pre-sample lags set to zero),
/// then LM = n R^2 against chi-square(h). The F variant uses the same
/// auxiliary R^2 with its exact numerator/denominator degrees of freedom.
pub fn breusch_godfrey(design: &Matrix, residuals: &[f64], h: usize) -> Result<SerialCorrelationTest> {
    assert!(h >= 1, "lag count must be positive");
    let n = residuals.len();
    assert_eq!(n, design.rows(), "residuals must match the design rows");
    let kx = design.cols();
    if n <= kx + h {
        return Err(CointError::DegreesOfFreedom {
            nobs: n,
            nparams: kx + h,
            context: "breusch_godfrey",
        });
    }
    if residuals.iter().all(|v| *v == 0.0) {
        return Err(CointError::ZeroVariance { context: "breusch_godfrey residuals" });
    }

    let mut rows = Vec::with_capacity(n);
    for t in 0..n {
        let mut row = Vec::with_capacity(kx + h);
        for c in 0..kx {
            row.push(design.get(t, c));
        }
        for lag in 1..=h {
            row.push(if t >= lag { residuals[t - lag] } else { 0.0 });
        }
        rows.push(row);
    }
    let aux = ols_fit(&Matrix::from_rows(&rows), residuals)?;

    let mean = residuals.iter().sum::<f64>() / n as f64;
    let tss: f64 = residuals.iter().map(|v| (v - mean).powi(2)).sum();
    if tss <= 0.0 {
        return Err(CointError::ZeroVariance { context: "breusch_godfrey residuals" });
    }
    let rss: f64 = aux.residuals.iter().map(|e| e * e).sum();
    let r2 = (1.0 - rss / tss).clamp(0.0, 1.0);
    let lm_stat = n as f64 * r2;
    let denom_df = (n - kx - h) as f64;
    let f_stat = (r2 / h as f64) / ((1.0 - r2) / denom_df);
    Ok(SerialCorrelationTest {
        lm_stat,
        f_stat,
        p_value: chi_square_sf(lm_stat, h),
        lags: h,
    })
}
