//! Augmented Dickey-Fuller unit-root tests on simulated series.
//!
//! Tests a driftless random walk and a stationary AR(1) in levels and first
//! differences, then classifies each series by its order of integration.
//!
//! Run with `cargo run --example unit_roots`.

use coint::adf::{adf_test, integration_order, AdfDetCase, InfoCriterion, LagSpec};
use coint::series::TimeSeries;
use coint::sim;

fn main() -> coint::Result<()> {
    let spec = LagSpec::Auto { max_p: 4, criterion: InfoCriterion::Sic };

    let walk = TimeSeries::new("walk", 1950, sim::random_walk(120, 42));
    let stationary = TimeSeries::new("ar1", 1950, sim::ar1(120, 0.5, 43));

    println!("{:<8} {:>10} {:>12} {:>12}  decision", "series", "form", "statistic", "5% critical");
    for s in [&walk, &stationary] {
        for (label, form) in [("level", s.clone()), ("1st diff", s.difference(1)?)] {
            let res = adf_test(&form, AdfDetCase::Constant, spec)?;
            println!(
                "{:<8} {:>10} {:>12.4} {:>12.4}  {}",
                s.name,
                label,
                res.statistic,
                res.critical_values.five_pct,
                if res.reject_at_5pct { "reject unit root" } else { "unit root stands" }
            );
        }
    }

    println!();
    for s in [&walk, &stationary] {
        let d = integration_order(s, AdfDetCase::Constant, spec, 2)?;
        println!("{} is integrated of order {d}", s.name);
    }
    Ok(())
}
