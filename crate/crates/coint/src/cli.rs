//! Command-line interface: each analysis stage is exposed as a subcommand
//! and `pipeline` chains them end to end. Every subcommand renders through
//! the shared report layer, so text and JSON output have one shape.
//!
//! Exit codes: 0 success (including verdict-terminated pipelines), 2
//! configuration errors, 3 data errors, 4 numerical failures.

use crate::adf::{AdfDetCase, InfoCriterion, LagSpec};
use crate::error::{CointError, Result};
use crate::johansen::{johansen_test, DetCase};
use crate::pipeline::{load_dataset, run_pipeline, PipelineConfig};
use crate::report::{render, LongRunRow, OutputFormat, Report, SignificanceLevel, VecmTable};
use crate::varsel::lag_order_table;
use crate::vecm::{causality_matrix, fit_vecm, long_run_significant, wald_short_run};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "coint",
    version,
    about = "Unit-root, cointegration, and error-correction analysis for annual time series"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Augmented Dickey-Fuller unit-root tests and integration orders
    Adf(AdfArgs),
    /// VAR lag-order selection table (LR, FPE, AIC, SC, HQ)
    Varselect(VarselectArgs),
    /// Johansen cointegration test (trace and max-eigenvalue)
    Johansen(JohansenArgs),
    /// Vector error-correction model estimates
    Vecm(VecmArgs),
    /// Short-run Wald causality tests from a fitted VECM
    Causality(CausalityArgs),
    /// Full analysis: ADF, lag selection, Johansen, VECM, causality, diagnostics
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input CSV with a year column and one column per variable
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated variable names, in system order
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
    /// Output format
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: OutputFormat,
    /// CSV field delimiter
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    /// Decimal separator of numeric cells ('.' or ',')
    #[arg(long, env = "COINT_DECIMAL_SEP", default_value_t = '.')]
    decimal_separator: char,
    /// Header name of the year column (default: first column)
    #[arg(long)]
    year_column: Option<String>,
    /// Apply a natural-log transform to every variable
    #[arg(long)]
    log: bool,
    /// Significance level in percent: 1, 5, or 10 [default: 5]
    #[arg(long, value_parser = parse_significance)]
    significance: Option<SignificanceLevel>,
}

impl CommonArgs {
    fn pipeline_config(&self) -> Result<PipelineConfig> {
        if self.delimiter.len_utf8() != 1 {
            return Err(CointError::Config {
                message: format!("delimiter '{}' is not a single byte", self.delimiter),
            });
        }
        Ok(PipelineConfig {
            input: self.input.clone(),
            load: crate::series::LoadOptions {
                delimiter: self.delimiter as u8,
                decimal_separator: self.decimal_separator,
                year_column: self.year_column.clone(),
                value_columns: Vec::new(),
            },
            variables: self.vars.clone(),
            log_transform: self.log,
            significance: self.significance,
            format: self.format,
            ..PipelineConfig::default()
        })
    }

    fn level(&self) -> SignificanceLevel {
        self.significance.unwrap_or(SignificanceLevel::FivePct)
    }

    fn report(&self) -> Report {
        Report::new(self.vars.clone(), self.level(), 0)
    }
}

#[derive(Args)]
struct AdfArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Deterministic terms in the test regression
    #[arg(long, default_value = "constant", value_parser = parse_adf_det)]
    det: AdfDetCase,
    /// Fixed lagged-difference count (otherwise selected automatically)
    #[arg(long, conflicts_with_all = ["max_lags", "criterion"])]
    lags: Option<usize>,
    /// Upper bound for automatic lag selection
    #[arg(long, default_value_t = 4)]
    max_lags: usize,
    /// Information criterion for automatic lag selection
    #[arg(long, default_value = "sic", value_parser = parse_criterion)]
    criterion: InfoCriterion,
}

#[derive(Args)]
struct VarselectArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Largest lag order in the comparison table
    #[arg(long, default_value_t = 4)]
    max_lag: usize,
}

#[derive(Args)]
struct JohansenArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// VAR lag order in levels
    #[arg(long, default_value_t = 2)]
    lag: usize,
    /// Deterministic case: 2, 3, or 4
    #[arg(long = "det-case", default_value = "3", value_parser = parse_det_case)]
    det_case: DetCase,
}

#[derive(Args)]
struct VecmArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// VAR lag order in levels (lagged differences = lag - 1)
    #[arg(long, default_value_t = 2)]
    lag: usize,
    /// Cointegrating rank from the Johansen stage
    #[arg(long)]
    rank: usize,
    #[arg(long = "det-case", default_value = "3", value_parser = parse_det_case)]
    det_case: DetCase,
}

#[derive(Args)]
struct CausalityArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, default_value_t = 2)]
    lag: usize,
    #[arg(long)]
    rank: usize,
    #[arg(long = "det-case", default_value = "3", value_parser = parse_det_case)]
    det_case: DetCase,
    /// Equation to test (requires --source; default: every ordered pair)
    #[arg(long, requires = "source")]
    target: Option<String>,
    /// Variable whose lags are tested for exclusion (requires --target)
    #[arg(long, requires = "target")]
    source: Option<String>,
}

#[derive(Args)]
struct PipelineArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Largest lag order considered in selection
    #[arg(long, default_value_t = 4)]
    max_lag: usize,
    /// Johansen deterministic case: 2, 3, or 4
    #[arg(long = "det-case", value_parser = parse_det_case)]
    det_case: Option<DetCase>,
    /// Fixed ADF lag count (otherwise automatic by SIC)
    #[arg(long)]
    adf_lags: Option<usize>,
    /// Seed recorded in the report for reproducibility
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    match s {
        "text" => Ok(OutputFormat::Text),
        "json" => Ok(OutputFormat::Json),
        other => Err(format!("unknown format '{other}' (expected text or json)")),
    }
}

fn parse_significance(s: &str) -> std::result::Result<SignificanceLevel, String> {
    match s.trim_end_matches('%') {
        "1" => Ok(SignificanceLevel::OnePct),
        "5" => Ok(SignificanceLevel::FivePct),
        "10" => Ok(SignificanceLevel::TenPct),
        other => Err(format!("unsupported level '{other}' (expected 1, 5, or 10)")),
    }
}

fn parse_adf_det(s: &str) -> std::result::Result<AdfDetCase, String> {
    match s {
        "none" => Ok(AdfDetCase::None),
        "constant" => Ok(AdfDetCase::Constant),
        "constant-trend" | "trend" => Ok(AdfDetCase::ConstantTrend),
        other => Err(format!("unknown case '{other}' (expected none, constant, or constant-trend)")),
    }
}

fn parse_det_case(s: &str) -> std::result::Result<DetCase, String> {
    match s {
        "2" | "restricted-constant" => Ok(DetCase::RestrictedConstant),
        "3" | "unrestricted-constant" => Ok(DetCase::UnrestrictedConstant),
        "4" | "restricted-trend" => Ok(DetCase::RestrictedTrend),
        other => Err(format!("unknown case '{other}' (expected 2, 3, or 4)")),
    }
}

fn parse_criterion(s: &str) -> std::result::Result<InfoCriterion, String> {
    match s.to_ascii_lowercase().as_str() {
        "aic" => Ok(InfoCriterion::Aic),
        "sic" | "sbc" | "bic" => Ok(InfoCriterion::Sic),
        other => Err(format!("unknown criterion '{other}' (expected aic or sic)")),
    }
}

impl Cli {
    /// Executes the selected subcommand and returns the rendered output.
    pub fn run(&self) -> Result<Vec<u8>> {
        match &self.command {
            Command::Adf(a) => run_adf(a),
            Command::Varselect(a) => run_varselect(a),
            Command::Johansen(a) => run_johansen(a),
            Command::Vecm(a) => run_vecm(a),
            Command::Causality(a) => run_causality(a),
            Command::Pipeline(a) => run_pipeline_cmd(a),
        }
    }
}

fn run_adf(args: &AdfArgs) -> Result<Vec<u8>> {
    let cfg = args.common.pipeline_config()?;
    let ds = load_dataset(&cfg)?;
    let spec = match args.lags {
        Some(p) => LagSpec::Fixed(p),
        None => LagSpec::Auto {
            max_p: args.max_lags,
            criterion: args.criterion,
        },
    };
    let mut report = args.common.report();
    report.adf_table = Some(
        crate::pipeline::adf_table(&ds, args.det, spec, args.common.level())
            .map_err(|e| e.in_stage("adf"))?,
    );
    Ok(render(&report, args.common.format))
}

fn run_varselect(args: &VarselectArgs) -> Result<Vec<u8>> {
    let cfg = args.common.pipeline_config()?;
    let ds = load_dataset(&cfg)?;
    let mut report = args.common.report();
    report.lag_table =
        Some(lag_order_table(&ds, args.max_lag).map_err(|e| e.in_stage("lag-selection"))?);
    Ok(render(&report, args.common.format))
}

fn run_johansen(args: &JohansenArgs) -> Result<Vec<u8>> {
    let cfg = args.common.pipeline_config()?;
    let ds = load_dataset(&cfg)?;
    let mut report = args.common.report();
    report.johansen_table =
        Some(johansen_test(&ds, args.lag, args.det_case).map_err(|e| e.in_stage("johansen"))?);
    Ok(render(&report, args.common.format))
}

fn vecm_table_from_fit(fit: &crate::vecm::VecmFit) -> VecmTable {
    VecmTable {
        rank: fit.rank,
        lag_diffs: fit.lag_diffs,
        beta: fit.beta.clone(),
        equations: fit.equations.clone(),
        long_run: fit
            .equations
            .iter()
            .map(|eq| LongRunRow {
                equation: eq.target.clone(),
                lambda: eq.ect_coeff,
                tstat: eq.ect_tstat,
                significant: long_run_significant(eq.ect_coeff, eq.ect_tstat),
            })
            .collect(),
        nobs: fit.nobs,
    }
}

fn run_vecm(args: &VecmArgs) -> Result<Vec<u8>> {
    let cfg = args.common.pipeline_config()?;
    let ds = load_dataset(&cfg)?;
    let fit =
        fit_vecm(&ds, args.rank, args.lag, args.det_case).map_err(|e| e.in_stage("vecm"))?;
    let mut report = args.common.report();
    report.vecm_table = Some(vecm_table_from_fit(&fit));
    Ok(render(&report, args.common.format))
}

fn run_causality(args: &CausalityArgs) -> Result<Vec<u8>> {
    let cfg = args.common.pipeline_config()?;
    let ds = load_dataset(&cfg)?;
    let fit =
        fit_vecm(&ds, args.rank, args.lag, args.det_case).map_err(|e| e.in_stage("vecm"))?;
    let results = match (&args.target, &args.source) {
        (Some(t), Some(s)) => vec![wald_short_run(&fit, t, s).map_err(|e| e.in_stage("causality"))?],
        _ => causality_matrix(&fit).map_err(|e| e.in_stage("causality"))?,
    };
    let mut report = args.common.report();
    report.causality_table = Some(results);
    Ok(render(&report, args.common.format))
}

fn run_pipeline_cmd(args: &PipelineArgs) -> Result<Vec<u8>> {
    let mut cfg = args.common.pipeline_config()?;
    cfg.max_lag = args.max_lag;
    cfg.det_case = args.det_case;
    cfg.adf_lag_spec = args.adf_lags.map(LagSpec::Fixed);
    cfg.seed = args.seed;
    let report = run_pipeline(&cfg)?;
    Ok(render(&report, cfg.format))
}
