//! Residual diagnostics: Jarque-Bera normality and Breusch-Godfrey
//! serial correlation.
//!
//! Fits a small regression twice, once with white-noise errors and once
//! with AR(1) errors, and shows how each test separates the two cases.
//!
//! Run with `cargo run --example residual_diagnostics`.

use coint::diagnostics::{breusch_godfrey, jarque_bera};
use coint::linalg::{ols_fit, Matrix};
use coint::sim;

fn main() -> coint::Result<()> {
    let n = 200;
    let x1 = sim::white_noise(n, 1.0, 1);

    for (label, errors) in [
        ("white-noise errors", sim::white_noise(n, 1.0, 2)),
        ("AR(1) errors, phi = 0.8", sim::ar1(n, 0.8, 3)),
    ] {
        // y = 1 + 0.5 x1 + e on a [1, x1] design.
        let mut rows = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        for t in 0..n {
            rows.push(vec![1.0, x1[t]]);
            y.push(1.0 + 0.5 * x1[t] + errors[t]);
        }
        let design = Matrix::from_rows(&rows);
        let fit = ols_fit(&design, &y)?;

        let norm = jarque_bera(&fit.residuals)?;
        let serial = breusch_godfrey(&design, &fit.residuals, 2)?;
        println!("{label}:");
        println!(
            "  skewness {:>7.4}, kurtosis {:>7.4}, JB {:>8.4} (p = {:.4})",
            norm.skewness, norm.kurtosis, norm.jarque_bera, norm.p_value
        );
        println!(
            "  BG with {} lags: LM {:>8.4} (p = {:.4}), F {:>8.4}",
            serial.lags, serial.lm_stat, serial.p_value, serial.f_stat
        );
        println!();
    }
    Ok(())
}
