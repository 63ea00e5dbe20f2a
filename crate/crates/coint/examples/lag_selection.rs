//! VAR lag-order selection over a common estimation sample.
//!
//! Simulates a bivariate VAR(1), computes the selection table for lag orders
//! 0..=4, and prints the sequential LR test alongside FPE, AIC, SC, and HQ.
//! Every criterion is evaluated on the same observations so the columns are
//! comparable across rows.
//!
//! Run with `cargo run --example lag_selection`.

use coint::series::{Dataset, TimeSeries};
use coint::sim;
use coint::varsel::lag_order_table;

fn main() -> coint::Result<()> {
    let a = vec![vec![0.5, 0.1], vec![0.2, 0.4]];
    let cols = sim::var1(160, &a, 7);
    let ds = Dataset::new(vec![
        TimeSeries::new("u", 1900, cols[0].clone()),
        TimeSeries::new("v", 1900, cols[1].clone()),
    ])?;

    let table = lag_order_table(&ds, 4)?;
    println!("common sample: T = {}", table.nobs);
    println!(
        "{:<4} {:>11} {:>11} {:>11} {:>9} {:>9} {:>9}",
        "lag", "loglik", "LR", "FPE", "AIC", "SC", "HQ"
    );
    for row in &table.rows {
        let lr = row.lr.map_or("-".to_string(), |v| format!("{v:.4}"));
        println!(
            "{:<4} {:>11.4} {:>11} {:>11.6} {:>9.4} {:>9.4} {:>9.4}",
            row.lag, row.loglik, lr, row.fpe, row.aic, row.sc, row.hq
        );
    }

    let s = &table.starred;
    println!("\nselected lag by criterion:");
    if let Some(lr) = s.lr {
        println!("  LR  {lr}");
    }
    println!("  FPE {}\n  AIC {}\n  SC  {}\n  HQ  {}", s.fpe, s.aic, s.sc, s.hq);
    Ok(())
}
