//! End-to-end orchestration: unit-root classification, lag selection,
//! cointegration testing, VECM estimation, causality tests, and residual
//! diagnostics, driven by a single config.
//!
//! Stage preconditions are enforced as verdicts, not crashes: if the
//! variables are not all integrated of order one the report stops after
//! the unit-root stage with an explanation, and the error-correction
//! stages only run when the decided rank is at least one.

use crate::adf::{adf_test, AdfDetCase, InfoCriterion, LagSpec};
use crate::diagnostics::{breusch_godfrey, jarque_bera};
use crate::error::{CointError, Result};
use crate::johansen::{johansen_test, DetCase};
use crate::report::{
    AdfRow, AdfTable, DiagnosticsEntry, IntegrationDecision, LongRunRow, OutputFormat, Report,
    SignificanceLevel, VecmTable, Verdict,
};
use crate::series::{load_csv, Dataset, LoadOptions, TimeSeries};
use crate::varsel::lag_order_table;
use crate::vecm::{causality_matrix, fit_vecm, long_run_significant};
use std::path::PathBuf;

/// Serial-correlation lag count used by the diagnostics stage.
const BG_LAGS: usize = 2;
/// Differencing ceiling for integration-order classification.
const MAX_D: usize = 2;

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub input: PathBuf,
    pub load: LoadOptions,
    /// Ordered variable list; order defines the system.
    pub variables: Vec<String>,
    /// Natural-log transform applied on load.
    pub log_transform: bool,
    pub max_lag: usize,
    /// Johansen deterministic case; defaults to the unrestricted constant.
    pub det_case: Option<DetCase>,
    /// Unit-root lag handling; defaults to automatic selection by SIC up
    /// to `max_lag`.
    pub adf_lag_spec: Option<LagSpec>,
    pub significance: Option<SignificanceLevel>,
    pub format: OutputFormat,
    /// Recorded in the report so reruns are attributable; the pipeline
    /// itself is deterministic.
    pub seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            input: PathBuf::new(),
            load: LoadOptions::default(),
            variables: Vec::new(),
            log_transform: false,
            max_lag: 4,
            det_case: None,
            adf_lag_spec: None,
            significance: None,
            format: OutputFormat::Text,
            seed: 0,
        }
    }
}

/// ADF deterministic specification implied by the cointegration case:
/// trending systems test with a trend, the others with a constant.
fn adf_case_for(det: DetCase) -> AdfDetCase {
    match det {
        DetCase::RestrictedTrend => AdfDetCase::ConstantTrend,
        _ => AdfDetCase::Constant,
    }
}

fn validate(cfg: &PipelineConfig) -> Result<()> {
    if cfg.variables.is_empty() {
        return Err(CointError::Config {
            message: "variable list is empty".into(),
        });
    }
    if cfg.max_lag < 1 {
        return Err(CointError::Config {
            message: "max_lag must be at least 1".into(),
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    for v in &cfg.variables {
        if !seen.insert(v) {
            return Err(CointError::Config {
                message: format!("variable '{v}' listed twice"),
            });
        }
    }
    Ok(())
}

/// Loads, selects, and optionally log-transforms the input series.
pub fn load_dataset(cfg: &PipelineConfig) -> Result<Dataset> {
    validate(cfg)?;
    let stage = |e: CointError| e.in_stage("load");
    let ds = load_csv(&cfg.input, &cfg.load).map_err(stage)?;
    let ds = ds.select(&cfg.variables).map_err(stage)?;
    if cfg.log_transform {
        let series: Result<Vec<TimeSeries>> = ds.series().iter().map(|s| s.ln()).collect();
        Dataset::new(series.map_err(stage)?).map_err(stage)
    } else {
        Ok(ds)
    }
}

/// Unit-root table for every variable: each series is tested in levels and
/// then in successive differences until the null is rejected at `level`,
/// which fixes its integration order (undetermined past two differences).
pub fn adf_table(
    ds: &Dataset,
    det: AdfDetCase,
    lag_spec: LagSpec,
    level: SignificanceLevel,
) -> Result<AdfTable> {
    let mut rows = Vec::new();
    let mut decisions = Vec::new();
    for s in ds.series() {
        let mut order = None;
        for d in 0..=MAX_D {
            let tested = if d == 0 { s.clone() } else { s.difference(d)? };
            let res = adf_test(&tested, det, lag_spec)?;
            let reject = res.statistic < level.pick(&res.critical_values);
            rows.push(AdfRow {
                variable: s.name.clone(),
                differencing: d,
                statistic: res.statistic,
                lags_used: res.lags_used,
                critical_values: res.critical_values,
                reject,
                nobs: res.nobs,
            });
            if reject {
                order = Some(d);
                break;
            }
        }
        decisions.push(IntegrationDecision {
            variable: s.name.clone(),
            order,
        });
    }
    Ok(AdfTable {
        det_case: det,
        rows,
        orders: decisions,
    })
}

fn order_summary(names: &[&str], orders: &[Option<usize>]) -> String {
    names
        .iter()
        .zip(orders)
        .map(|(n, o)| match o {
            Some(d) => format!("{n}: I({d})"),
            None => format!("{n}: order above {MAX_D} or undetermined"),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Runs every stage in order and assembles the report. Early stops
/// (all-stationary or mixed integration orders) are successful outcomes.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<Report> {
    validate(cfg)?;
    let mut log: Vec<String> = Vec::new();
    let det = cfg.det_case.unwrap_or_else(|| {
        log.push("deterministic case defaulted to the unrestricted constant (case 3)".into());
        DetCase::default()
    });
    let adf_spec = cfg.adf_lag_spec.unwrap_or_else(|| {
        log.push(format!(
            "unit-root lag order selected automatically by SIC over 0..={}",
            cfg.max_lag
        ));
        LagSpec::Auto {
            max_p: cfg.max_lag,
            criterion: InfoCriterion::Sic,
        }
    });
    let level = cfg.significance.unwrap_or_else(|| {
        log.push("significance level defaulted to 5%".into());
        SignificanceLevel::FivePct
    });

    let ds = load_dataset(cfg)?;
    let mut report = Report::new(
        ds.names().iter().map(|s| s.to_string()).collect(),
        level,
        cfg.seed,
    );

    let adf_det = adf_case_for(det);
    let adf = adf_table(&ds, adf_det, adf_spec, level).map_err(|e| e.in_stage("adf"))?;
    let orders: Vec<Option<usize>> = adf.orders.iter().map(|d| d.order).collect();
    report.adf_table = Some(adf);

    let names = ds.names();
    if orders.iter().all(|o| *o == Some(0)) {
        report.decisions_log = log;
        report.verdict = Verdict::AllStationary(format!(
            "every series rejects the unit root in levels ({}); model the levels with a VAR instead",
            order_summary(&names, &orders)
        ));
        return Ok(report);
    }
    if !orders.iter().all(|o| *o == Some(1)) {
        report.decisions_log = log;
        report.verdict = Verdict::MixedIntegration(order_summary(&names, &orders));
        return Ok(report);
    }

    let table = lag_order_table(&ds, cfg.max_lag).map_err(|e| e.in_stage("lag-selection"))?;
    let mut k_var = table.starred.sc;
    log.push(format!(
        "VAR lag order {} selected by the Schwarz criterion over 0..={}",
        k_var, cfg.max_lag
    ));
    report.lag_table = Some(table);
    if k_var < 1 {
        k_var = 1;
        log.push("selected lag order 0 raised to 1: the cointegration test needs one level lag".into());
    }

    let johansen = johansen_test(&ds, k_var, det).map_err(|e| e.in_stage("johansen"))?;
    let rank = if level == SignificanceLevel::FivePct {
        johansen.decided_rank
    } else {
        // tabulated critical values exist only at 5%; other levels decide
        // the rank from the p-value sequence
        let r = johansen
            .trace_p_values
            .iter()
            .position(|p| *p >= level.alpha())
            .unwrap_or(johansen.trace_p_values.len());
        log.push(format!(
            "cointegration rank decided by the p-value rule at {} (critical values are tabulated at 5% only)",
            level.label()
        ));
        r
    };
    report.johansen_table = Some(johansen);

    if rank == 0 {
        log.push("no cointegration at the chosen level: error-correction stages skipped".into());
        report.decisions_log = log;
        return Ok(report);
    }

    let mut k_var_vecm = k_var;
    if k_var_vecm < 2 {
        k_var_vecm = 2;
        log.push("one lagged difference added to the VECM so short-run Wald tests are defined".into());
    }
    let fit = fit_vecm(&ds, rank, k_var_vecm, det).map_err(|e| e.in_stage("vecm"))?;
    let long_run: Vec<LongRunRow> = fit
        .equations
        .iter()
        .map(|eq| LongRunRow {
            equation: eq.target.clone(),
            lambda: eq.ect_coeff,
            tstat: eq.ect_tstat,
            significant: long_run_significant(eq.ect_coeff, eq.ect_tstat),
        })
        .collect();
    report.vecm_table = Some(VecmTable {
        rank: fit.rank,
        lag_diffs: fit.lag_diffs,
        beta: fit.beta.clone(),
        equations: fit.equations.clone(),
        long_run,
        nobs: fit.nobs,
    });

    report.causality_table = Some(causality_matrix(&fit).map_err(|e| e.in_stage("causality"))?);

    let mut diagnostics = Vec::new();
    for (i, eq) in fit.equations.iter().enumerate() {
        let resid = fit.residuals.column(i);
        let normality = jarque_bera(&resid).map_err(|e| e.in_stage("diagnostics"))?;
        let serial = breusch_godfrey(&fit.design, &resid, BG_LAGS)
            .map_err(|e| e.in_stage("diagnostics"))?;
        diagnostics.push(DiagnosticsEntry {
            equation: eq.target.clone(),
            normality,
            serial_correlation: serial,
        });
    }
    log.push(format!(
        "serial-correlation diagnostics use {BG_LAGS} lagged residuals"
    ));
    report.diagnostics_block = Some(diagnostics);
    report.decisions_log = log;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::render;
    use crate::sim;
    use std::io::Write;

    fn write_csv_file(path: &std::path::Path, cols: &[(&str, &[f64])]) {
        let mut f = std::fs::File::create(path).unwrap();
        let header: Vec<&str> = std::iter::once("year").chain(cols.iter().map(|(n, _)| *n)).collect();
        writeln!(f, "{}", header.join(",")).unwrap();
        for t in 0..cols[0].1.len() {
            let mut row = vec![(1950 + t as i32).to_string()];
            for (_, v) in cols {
                row.push(format!("{}", v[t]));
            }
            writeln!(f, "{}", row.join(",")).unwrap();
        }
    }

    fn config_for(path: &std::path::Path, vars: &[&str]) -> PipelineConfig {
        PipelineConfig {
            input: path.to_path_buf(),
            variables: vars.iter().map(|s| s.to_string()).collect(),
            max_lag: 3,
            seed: 7,
            ..PipelineConfig::default()
        }
    }

    #[test]
    fn empty_variable_list_fails_before_io() {
        let cfg = PipelineConfig {
            input: PathBuf::from("/definitely/not/a/file.csv"),
            ..PipelineConfig::default()
        };
        // a missing file would be an Io error; config validation must win
        assert!(matches!(run_pipeline(&cfg), Err(CointError::Config { .. })));
    }

    #[test]
    fn zero_max_lag_is_a_config_error() {
        let cfg = PipelineConfig {
            input: PathBuf::from("/definitely/not/a/file.csv"),
            variables: vec!["y".into()],
            max_lag: 0,
            ..PipelineConfig::default()
        };
        assert!(matches!(run_pipeline(&cfg), Err(CointError::Config { .. })));
    }

    #[test]
    fn duplicate_variables_are_rejected() {
        let cfg = PipelineConfig {
            input: PathBuf::from("/definitely/not/a/file.csv"),
            variables: vec!["y".into(), "y".into()],
            ..PipelineConfig::default()
        };
        assert!(matches!(run_pipeline(&cfg), Err(CointError::Config { .. })));
    }

    #[test]
    fn cointegrated_system_produces_a_full_report() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sys.csv");
        let (y, x) = sim::cointegrated_pair(300, -0.4, 11);
        let shared = sim::random_walk(300, 12);
        let z: Vec<f64> = shared.iter().zip(&y).map(|(a, b)| a + 0.3 * b).collect();
        write_csv_file(&path, &[("y", &y), ("x", &x), ("z", &z)]);

        let report = run_pipeline(&config_for(&path, &["y", "x", "z"])).unwrap();
        assert_eq!(report.verdict, Verdict::Completed);
        assert!(report.adf_table.is_some());
        assert!(report.lag_table.is_some());
        let j = report.johansen_table.as_ref().unwrap();
        assert!(j.decided_rank >= 1, "rank = {}", j.decided_rank);
        let v = report.vecm_table.as_ref().unwrap();
        assert!(v.lag_diffs >= 1);
        assert_eq!(report.causality_table.as_ref().unwrap().len(), 6);
        assert_eq!(report.diagnostics_block.as_ref().unwrap().len(), 3);
        assert!(!report.decisions_log.is_empty());
    }

    #[test]
    fn stationary_dataset_stops_with_all_stationary_verdict() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("flat.csv");
        let a = sim::ar1(250, 0.3, 21);
        let b = sim::ar1(250, -0.2, 22);
        write_csv_file(&path, &[("a", &a), ("b", &b)]);

        let report = run_pipeline(&config_for(&path, &["a", "b"])).unwrap();
        assert!(matches!(report.verdict, Verdict::AllStationary(_)));
        assert!(report.adf_table.is_some());
        assert!(report.lag_table.is_none());
        assert!(report.johansen_table.is_none());
    }

    #[test]
    fn mixed_orders_stop_with_explanatory_verdict() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mixed.csv");
        let stationary = sim::ar1(250, 0.2, 31);
        let walk = sim::random_walk(250, 33);
        write_csv_file(&path, &[("s", &stationary), ("w", &walk)]);

        let report = run_pipeline(&config_for(&path, &["s", "w"])).unwrap();
        match &report.verdict {
            Verdict::MixedIntegration(detail) => {
                assert!(detail.contains("s: I(0)"), "detail: {detail}");
                assert!(detail.contains("w: I(1)"), "detail: {detail}");
            }
            other => panic!("expected mixed-integration verdict, got {other:?}"),
        }
        assert!(report.johansen_table.is_none());
    }

    #[test]
    fn missing_variable_is_a_load_stage_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("two.csv");
        let y = sim::random_walk(60, 41);
        write_csv_file(&path, &[("y", &y)]);
        let err = run_pipeline(&config_for(&path, &["y", "ghost"])).unwrap_err();
        assert!(matches!(err, CointError::Stage { stage: "load", .. }), "{err:?}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn json_output_is_deterministic_across_runs() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("det.csv");
        let (y, x) = sim::cointegrated_pair(250, -0.35, 51);
        write_csv_file(&path, &[("y", &y), ("x", &x)]);

        let cfg = config_for(&path, &["y", "x"]);
        let a = render(&run_pipeline(&cfg).unwrap(), OutputFormat::Json);
        let b = render(&run_pipeline(&cfg).unwrap(), OutputFormat::Json);
        assert_eq!(a, b);
    }

    #[test]
    fn log_transform_requires_positive_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("neg.csv");
        let y: Vec<f64> = sim::random_walk(100, 61);
        write_csv_file(&path, &[("y", &y)]);
        let mut cfg = config_for(&path, &["y"]);
        cfg.log_transform = true;
        // a zero-mean random walk crosses zero, so the log must fail loudly
        let err = run_pipeline(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 3, "{err:?}");
    }
}
