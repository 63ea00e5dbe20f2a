//! VECM estimation with long-run and short-run causality tests.
//!
//! Simulates a bivariate error-correction system in which only y adjusts to
//! the equilibrium error, fits the VECM at rank 1, and then asks both
//! causality questions: does the error-correction coefficient pull the
//! equation back to equilibrium (long run), and do lagged differences of
//! the other variable enter the equation (short run, Wald exclusion)?
//!
//! Run with `cargo run --example vecm_causality`.

use coint::johansen::DetCase;
use coint::series::{Dataset, TimeSeries};
use coint::sim;
use coint::vecm::{causality_matrix, fit_vecm, long_run_causality};

fn main() -> coint::Result<()> {
    let (y, x) = sim::vecm_pair(300, -0.4, 0.0, 19);
    let ds = Dataset::new(vec![
        TimeSeries::new("y", 1700, y),
        TimeSeries::new("x", 1700, x),
    ])?;

    // k_var = 2 keeps one lagged difference, so Wald tests are defined.
    let fit = fit_vecm(&ds, 1, 2, DetCase::UnrestrictedConstant)?;
    println!("cointegrating vector: {:.4?}", fit.beta);
    println!("effective sample: T = {}\n", fit.nobs);

    for eq in &fit.equations {
        println!(
            "d_{}: intercept {:.4} [{:.2}], ECT {:.4} [{:.2}]",
            eq.target, eq.intercept, eq.intercept_tstat, eq.ect_coeff, eq.ect_tstat
        );
    }

    println!("\nlong-run causality (negative, significant adjustment):");
    for name in &fit.variable_names {
        let lr = long_run_causality(&fit, name)?;
        println!(
            "  {name}: lambda {:>8.4}, t {:>7.3} -> {}",
            lr.lambda,
            lr.tstat,
            if lr.significant { "adjusts to equilibrium" } else { "no adjustment" }
        );
    }

    println!("\nshort-run causality (Wald exclusion of lagged differences):");
    for w in causality_matrix(&fit)? {
        let source = w.excluded_block[0]
            .strip_prefix("d_")
            .and_then(|s| s.split("_lag").next())
            .unwrap_or("?");
        println!(
            "  {} -> {}: chi2({}) = {:.4}, p = {:.4}",
            source, w.target_equation, w.df, w.chi_square, w.p_value
        );
    }
    Ok(())
}
