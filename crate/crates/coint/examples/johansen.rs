//! Johansen maximum-likelihood cointegration test on a simulated pair.
//!
//! The data-generating process ties y to x through the equilibrium error
//! y - x, so the true cointegrating rank is 1 with vector (1, -1). The
//! example prints both test sequences (trace and max-eigenvalue), the 5%
//! critical values, interpolated p-values, and the normalized vectors.
//!
//! Run with `cargo run --example johansen`.

use coint::johansen::{johansen_test, DetCase};
use coint::series::{Dataset, TimeSeries};
use coint::sim;

fn main() -> coint::Result<()> {
    let (y, x) = sim::cointegrated_pair(200, -0.4, 11);
    let ds = Dataset::new(vec![
        TimeSeries::new("y", 1850, y),
        TimeSeries::new("x", 1850, x),
    ])?;

    let res = johansen_test(&ds, 2, DetCase::UnrestrictedConstant)?;
    println!("effective sample: T = {}", res.t_effective);
    println!("eigenvalues: {:?}\n", res.eigenvalues);

    for (name, stats, cvs, ps) in [
        ("trace", &res.trace_stats, &res.trace_critical_values, &res.trace_p_values),
        ("max-eigenvalue", &res.max_eig_stats, &res.max_eig_critical_values, &res.max_eig_p_values),
    ] {
        println!("{name} test:");
        println!("{:<10} {:>10} {:>12} {:>9}", "null rank", "statistic", "5% critical", "p-value");
        for (r, ((stat, cv), p)) in stats.iter().zip(cvs.iter()).zip(ps.iter()).enumerate() {
            println!("{:<10} {:>10.4} {:>12.4} {:>9.4}", r, stat, cv, p);
        }
        println!();
    }

    println!("decided rank: {}", res.decided_rank);
    for j in 0..res.decided_rank {
        let vector: Vec<f64> = (0..res.beta.rows()).map(|i| res.beta.get(i, j)).collect();
        let loadings: Vec<f64> = (0..res.alpha.rows()).map(|i| res.alpha.get(i, j)).collect();
        println!("beta[{j}]  = {vector:.4?}");
        println!("alpha[{j}] = {loadings:.4?}");
    }
    Ok(())
}
