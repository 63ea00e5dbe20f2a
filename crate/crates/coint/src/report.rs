//! Report assembly and rendering: the structured output of the analysis
//! pipeline plus text and JSON serializers.
//!
//! The JSON schema is versioned through `schema_version` and numbers keep
//! full precision (round-tripping bit-exactly). The text renderer prints
//! aligned tables with six-decimal statistics, a `*` marker at the
//! configured significance level, and never uses locale-dependent digit
//! grouping.

use crate::adf::{AdfDetCase, CriticalValues};
use crate::diagnostics::{NormalityReport, SerialCorrelationTest};
use crate::johansen::JohansenResult;
use crate::varsel::LagSelectionTable;
use crate::vecm::{VecmEquation, WaldResult};
use serde::{Deserialize, Serialize};

/// Conventional test levels. Critical-value tables embed all three for the
/// unit-root test; the cointegration tables carry 5% only, so non-default
/// levels there fall back to the p-value rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignificanceLevel {
    #[serde(rename = "1%")]
    OnePct,
    #[serde(rename = "5%")]
    FivePct,
    #[serde(rename = "10%")]
    TenPct,
}

impl SignificanceLevel {
    pub fn alpha(self) -> f64 {
        match self {
            SignificanceLevel::OnePct => 0.01,
            SignificanceLevel::FivePct => 0.05,
            SignificanceLevel::TenPct => 0.10,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SignificanceLevel::OnePct => "1%",
            SignificanceLevel::FivePct => "5%",
            SignificanceLevel::TenPct => "10%",
        }
    }

    pub fn pick(self, cv: &CriticalValues) -> f64 {
        match self {
            SignificanceLevel::OnePct => cv.one_pct,
            SignificanceLevel::FivePct => cv.five_pct,
            SignificanceLevel::TenPct => cv.ten_pct,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutputFormat {
    #[serde(rename = "text")]
    Text,
    #[serde(rename = "json")]
    Json,
}

/// One unit-root regression: `differencing` counts how often the variable
/// was differenced before testing (0 = level).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdfRow {
    pub variable: String,
    pub differencing: usize,
    pub statistic: f64,
    pub lags_used: usize,
    pub critical_values: CriticalValues,
    /// Left-tail decision at the report's significance level.
    pub reject: bool,
    pub nobs: usize,
}

/// Integration order decided for one variable; `None` when the series is
/// still nonstationary after the maximum differencing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntegrationDecision {
    pub variable: String,
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdfTable {
    pub det_case: AdfDetCase,
    pub rows: Vec<AdfRow>,
    pub orders: Vec<IntegrationDecision>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LongRunRow {
    pub equation: String,
    pub lambda: f64,
    pub tstat: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VecmTable {
    pub rank: usize,
    pub lag_diffs: usize,
    /// Dominant cointegrating vector (trailing entry is the restricted
    /// deterministic coefficient in cases 2 and 4).
    pub beta: Vec<f64>,
    pub equations: Vec<VecmEquation>,
    pub long_run: Vec<LongRunRow>,
    pub nobs: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsEntry {
    pub equation: String,
    pub normality: NormalityReport,
    pub serial_correlation: SerialCorrelationTest,
}

/// Pipeline outcome. The two early-stop verdicts are successful outcomes
/// carrying an explanation, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Completed,
    AllStationary(String),
    MixedIntegration(String),
}

/// Full analysis output. Stages that did not run are `None`; every default
/// the pipeline applied on the user's behalf is spelled out in
/// `decisions_log`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub variables: Vec<String>,
    pub significance: SignificanceLevel,
    pub seed: u64,
    pub verdict: Verdict,
    pub adf_table: Option<AdfTable>,
    pub lag_table: Option<LagSelectionTable>,
    pub johansen_table: Option<JohansenResult>,
    pub vecm_table: Option<VecmTable>,
    pub causality_table: Option<Vec<WaldResult>>,
    pub diagnostics_block: Option<Vec<DiagnosticsEntry>>,
    pub decisions_log: Vec<String>,
}

pub const SCHEMA_VERSION: u32 = 1;

impl Report {
    /// Empty completed report; pipeline and CLI fill in the stages they run.
    pub fn new(variables: Vec<String>, significance: SignificanceLevel, seed: u64) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            variables,
            significance,
            seed,
            verdict: Verdict::Completed,
            adf_table: None,
            lag_table: None,
            johansen_table: None,
            vecm_table: None,
            causality_table: None,
            diagnostics_block: None,
            decisions_log: Vec::new(),
        }
    }
}

/// Serializes the report. JSON output is deterministic: field order is
/// fixed by the struct definitions and floats use the shortest exact
/// representation.
pub fn render(report: &Report, format: OutputFormat) -> Vec<u8> {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serialization");
            out.push(b'\n');
            out
        }
        OutputFormat::Text => render_text(report).into_bytes(),
    }
}

/// Six-decimal fixed formatting, falling back to scientific notation when
/// fixed notation would collapse a nonzero value to zeros.
fn fmt6(v: f64) -> String {
    if v != 0.0 && v.abs() < 5e-7 {
        format!("{v:.6e}")
    } else {
        format!("{v:.6}")
    }
}

fn starred(v: f64, star: bool) -> String {
    if star {
        format!("{}*", fmt6(v))
    } else {
        fmt6(v)
    }
}

/// Pads cells into aligned columns: first column left-aligned, the rest
/// right-aligned.
fn layout(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            let pad = widths[i].saturating_sub(cell.chars().count());
            if i == 0 {
                out.push_str(cell);
                out.push_str(&" ".repeat(pad));
            } else {
                out.push_str(&" ".repeat(pad));
                out.push_str(cell);
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    emit(&mut out, &header_cells);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    emit(&mut out, &rule);
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn adf_case_name(case: AdfDetCase) -> &'static str {
    match case {
        AdfDetCase::None => "none",
        AdfDetCase::Constant => "constant",
        AdfDetCase::ConstantTrend => "constant and trend",
    }
}

fn diff_label(d: usize) -> String {
    match d {
        0 => "level".to_string(),
        1 => "1st diff".to_string(),
        2 => "2nd diff".to_string(),
        n => format!("{n}th diff"),
    }
}

fn rank_label(r: usize) -> String {
    if r == 0 {
        "none".to_string()
    } else {
        format!("at most {r}")
    }
}

fn render_text(report: &Report) -> String {
    let mut s = String::new();
    s.push_str("Cointegration analysis report\n");
    s.push_str(&format!("Variables: {}\n", report.variables.join(", ")));
    s.push_str(&format!("Significance level: {}\n", report.significance.label()));
    match &report.verdict {
        Verdict::Completed => {}
        Verdict::AllStationary(detail) => {
            s.push_str(&format!("\nVerdict: all variables stationary in levels. {detail}\n"));
        }
        Verdict::MixedIntegration(detail) => {
            s.push_str(&format!("\nVerdict: integration orders differ; cointegration analysis not applicable. {detail}\n"));
        }
    }

    if let Some(adf) = &report.adf_table {
        s.push_str(&format!("\nUnit-root tests (ADF, deterministic terms: {})\n", adf_case_name(adf.det_case)));
        let level = report.significance;
        let rows: Vec<Vec<String>> = adf
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.variable.clone(),
                    diff_label(r.differencing),
                    r.lags_used.to_string(),
                    starred(r.statistic, r.reject),
                    fmt6(level.pick(&r.critical_values)),
                ]
            })
            .collect();
        s.push_str(&layout(
            &["Variable", "Series", "Lags", "Statistic", &format!("{} critical", level.label())],
            &rows,
        ));
        let orders: Vec<String> = adf
            .orders
            .iter()
            .map(|o| match o.order {
                Some(d) => format!("{}: I({d})", o.variable),
                None => format!("{}: undetermined", o.variable),
            })
            .collect();
        s.push_str(&format!("Integration orders: {}\n", orders.join(", ")));
        s.push_str(&format!("* rejects the unit-root null at {}\n", level.label()));
    }

    if let Some(table) = &report.lag_table {
        s.push_str(&format!("\nVAR lag-order selection (common sample, T = {})\n", table.nobs));
        let st = &table.starred;
        let rows: Vec<Vec<String>> = table
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.lag.to_string(),
                    fmt6(r.loglik),
                    r.lr.map(|v| starred(v, st.lr == Some(r.lag))).unwrap_or_else(|| "-".to_string()),
                    starred(r.fpe, st.fpe == r.lag),
                    starred(r.aic, st.aic == r.lag),
                    starred(r.sc, st.sc == r.lag),
                    starred(r.hq, st.hq == r.lag),
                ]
            })
            .collect();
        s.push_str(&layout(&["Lag", "LogL", "LR", "FPE", "AIC", "SC", "HQ"], &rows));
        s.push_str("* order selected by the criterion\n");
    }

    if let Some(j) = &report.johansen_table {
        s.push_str(&format!(
            "\nJohansen cointegration test (deterministic case {}, T = {})\n",
            j.det_case.case_number(),
            j.t_effective
        ));
        for (title, stats, cvs, pvals) in [
            ("Trace statistic", &j.trace_stats, &j.trace_critical_values, &j.trace_p_values),
            ("Max-eigenvalue statistic", &j.max_eig_stats, &j.max_eig_critical_values, &j.max_eig_p_values),
        ] {
            s.push_str(&format!("{title}:\n"));
            let rows: Vec<Vec<String>> = (0..stats.len())
                .map(|r| {
                    vec![
                        rank_label(r),
                        fmt6(j.eigenvalues[r]),
                        starred(stats[r], stats[r] > cvs[r]),
                        fmt6(cvs[r]),
                        fmt6(pvals[r]),
                    ]
                })
                .collect();
            s.push_str(&layout(
                &["Null rank", "Eigenvalue", "Statistic", "5% critical", "P-value"],
                &rows,
            ));
        }
        s.push_str(&format!("Decided rank: {}\n", j.decided_rank));
        s.push_str("* rejects the null at 5%\n");
    }

    if let Some(v) = &report.vecm_table {
        s.push_str(&format!(
            "\nVECM estimates (rank {}, {} lagged difference{}, T = {})\n",
            v.rank,
            v.lag_diffs,
            if v.lag_diffs == 1 { "" } else { "s" },
            v.nobs
        ));
        let beta: Vec<String> = v.beta.iter().map(|b| fmt6(*b)).collect();
        s.push_str(&format!("Cointegrating vector: [{}]\n", beta.join(", ")));
        let k = v.equations.len();
        let mut header: Vec<String> = vec!["Regressor".to_string()];
        for eq in &v.equations {
            header.push(format!("d_{}", eq.target));
        }
        let header_refs: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut row = vec!["intercept".to_string()];
        for eq in &v.equations {
            row.push(format!("{} [{}]", fmt6(eq.intercept), fmt6(eq.intercept_tstat)));
        }
        rows.push(row);
        for lag in 0..v.lag_diffs {
            for (jv, name) in report.variables.iter().take(k).enumerate() {
                let mut row = vec![format!("d_{}(-{})", name, lag + 1)];
                for eq in &v.equations {
                    row.push(format!(
                        "{} [{}]",
                        fmt6(eq.short_run.get(lag, jv)),
                        fmt6(eq.short_run_tstats.get(lag, jv))
                    ));
                }
                rows.push(row);
            }
        }
        let mut row = vec!["ECT(-1)".to_string()];
        for eq in &v.equations {
            row.push(format!("{} [{}]", fmt6(eq.ect_coeff), fmt6(eq.ect_tstat)));
        }
        rows.push(row);
        s.push_str(&layout(&header_refs, &rows));

        s.push_str("Long-run causality (adjustment coefficients):\n");
        let rows: Vec<Vec<String>> = v
            .long_run
            .iter()
            .map(|r| {
                vec![
                    r.equation.clone(),
                    starred(r.lambda, r.significant),
                    fmt6(r.tstat),
                    if r.significant { "yes".to_string() } else { "no".to_string() },
                ]
            })
            .collect();
        s.push_str(&layout(&["Equation", "Lambda", "t-stat", "Significant"], &rows));
        s.push_str("* negative and significant at the two-sided 5% normal point\n");
    }

    if let Some(c) = &report.causality_table {
        s.push_str("\nShort-run causality (Wald exclusion tests)\n");
        let alpha = report.significance.alpha();
        let rows: Vec<Vec<String>> = c
            .iter()
            .map(|w| {
                let source = w
                    .excluded_block
                    .first()
                    .and_then(|b| b.strip_prefix("d_"))
                    .and_then(|b| b.split("_lag").next())
                    .unwrap_or("?")
                    .to_string();
                vec![
                    format!("{} -> {}", source, w.target_equation),
                    starred(w.chi_square, w.p_value < alpha),
                    w.df.to_string(),
                    fmt6(w.p_value),
                ]
            })
            .collect();
        s.push_str(&layout(&["Direction", "Chi-square", "df", "P-value"], &rows));
        s.push_str(&format!("* short-run causality at {}\n", report.significance.label()));
    }

    if let Some(d) = &report.diagnostics_block {
        s.push_str("\nResidual diagnostics\n");
        let rows: Vec<Vec<String>> = d
            .iter()
            .map(|e| {
                vec![
                    e.equation.clone(),
                    fmt6(e.normality.skewness),
                    fmt6(e.normality.kurtosis),
                    fmt6(e.normality.jarque_bera),
                    fmt6(e.normality.p_value),
                    fmt6(e.serial_correlation.lm_stat),
                    fmt6(e.serial_correlation.p_value),
                ]
            })
            .collect();
        s.push_str(&layout(
            &["Equation", "Skewness", "Kurtosis", "Jarque-Bera", "JB p-value", "BG LM", "LM p-value"],
            &rows,
        ));
    }

    if !report.decisions_log.is_empty() {
        s.push_str("\nDecisions applied\n");
        for line in &report.decisions_log {
            s.push_str(&format!("- {line}\n"));
        }
    }
    s
}
