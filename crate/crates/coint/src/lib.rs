//! Cointegration analysis toolkit for annual macroeconomic time series.
//!
//! The crate covers the full inference chain used in applied long-run
//! analysis: augmented Dickey-Fuller unit-root tests, VAR lag-order
//! selection, the Johansen maximum-likelihood cointegration test, vector
//! error-correction estimation, Wald causality tests, and residual
//! diagnostics, plus a pipeline that runs the stages end to end from a CSV
//! file and renders text or JSON reports.
//!
//! Start with the `examples/` directory: each major capability has one
//! runnable example. The same functionality is exposed by the thin `coint`
//! binary for shell use.

pub mod adf;
pub mod cli;
pub mod diagnostics;
pub mod dist;
pub mod error;
pub mod johansen;
pub mod linalg;
pub mod pipeline;
pub mod report;
pub mod series;
pub mod sim;
pub mod varsel;
pub mod vecm;

pub use error::{CointError, Result};
