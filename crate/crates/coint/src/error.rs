//! Error type shared by every module, with the process exit-code mapping
//! used by the command-line interface.

use thiserror::Error;

/// Unified error for data loading, estimation, and table lookups.
#[derive(Debug, Error)]
pub enum CointError {
    /// A cell is empty where a value was required.
    #[error("missing value for column '{column}' in year {year}")]
    Gap { year: i32, column: String },

    /// Year column is not strictly increasing by one.
    #[error("years must increase by 1: row {row} has {found}, expected {expected}")]
    Order { row: usize, expected: i32, found: i32 },

    /// A cell could not be parsed as a number (or year).
    #[error("cannot parse '{value}' at row {row}, column '{column}'")]
    Parse { row: usize, column: String, value: String },

    /// A requested column is absent from the file header.
    #[error("column '{column}' not found in input")]
    MissingColumn { column: String },

    /// Differencing or lagging would consume the whole series.
    #[error("{op} of order {requested} needs a series longer than {requested} (length {len})")]
    Length { op: &'static str, requested: usize, len: usize },

    /// Series year ranges have an empty intersection.
    #[error("series have no overlapping years")]
    NoOverlap,

    /// Design matrix is rank deficient.
    #[error("design matrix is singular (rank {rank} < {cols} columns)")]
    SingularDesign { rank: usize, cols: usize },

    /// Not enough observations for the number of parameters.
    #[error("{nobs} observations cannot identify {nparams} parameters in {context}")]
    DegreesOfFreedom { nobs: usize, nparams: usize, context: &'static str },

    /// A matrix required to be positive definite is not.
    #[error("matrix is not positive definite")]
    NotPD,

    /// An input required to be symmetric exceeds the symmetry tolerance.
    #[error("matrix '{which}' is asymmetric beyond tolerance")]
    NotSymmetric { which: &'static str },

    /// A sample is shorter than the minimum a table or test supports.
    #[error("sample of {nobs} observations is below the supported minimum {min}")]
    SampleTooSmall { nobs: usize, min: usize },

    /// Degenerate input with no variation.
    #[error("zero variance in {context}")]
    ZeroVariance { context: &'static str },

    /// Log transform requested for a non-positive observation.
    #[error("cannot log-transform series '{series}': non-positive value in year {year}")]
    LogDomain { series: String, year: i32 },

    /// No difference order up to the maximum made the series stationary.
    #[error("series '{series}' not classified stationary up to difference order {max_d}")]
    OrderUndetermined { series: String, max_d: usize },

    /// A residual moment matrix is singular.
    #[error("singular moment matrix {which}")]
    SingularMoment { which: &'static str },

    /// An eigenvalue fell outside [0, 1), so ln(1 - mu) is undefined.
    #[error("eigenvalue {value} outside [0, 1)")]
    EigenvalueDomain { value: f64 },

    /// Critical-value lookup outside the embedded table.
    #[error("no tabulated critical value for {what}")]
    TableRange { what: String },

    /// An error-correction model was requested with cointegrating rank 0.
    #[error("cointegrating rank is 0; an error-correction model is not applicable")]
    NoCointegration,

    /// A joint test was requested over an empty restriction set.
    #[error("no lagged-difference coefficients to test (zero lagged differences)")]
    NothingToTest,

    /// Invalid configuration detected before any computation.
    #[error("invalid configuration: {message}")]
    Config { message: String },

    /// Wraps a failure with the pipeline stage it occurred in.
    #[error("stage '{stage}': {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<CointError>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CointError {
    /// Process exit code: 2 configuration, 3 data, 4 numerical failure.
    pub fn exit_code(&self) -> i32 {
        use CointError::*;
        match self {
            Config { .. } | MissingColumn { .. } | TableRange { .. } | NothingToTest
            | NoCointegration => 2,
            Gap { .. } | Order { .. } | Parse { .. } | Length { .. } | NoOverlap
            | SampleTooSmall { .. } | DegreesOfFreedom { .. } | ZeroVariance { .. }
            | LogDomain { .. } | Io(_) => 3,
            SingularDesign { .. } | NotPD | NotSymmetric { .. } | SingularMoment { .. }
            | EigenvalueDomain { .. } | OrderUndetermined { .. } => 4,
            Stage { source, .. } => source.exit_code(),
        }
    }

    /// Attach the pipeline stage name to an error bubbling out of it.
    pub fn in_stage(self, stage: &'static str) -> CointError {
        CointError::Stage { stage, source: Box::new(self) }
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, CointError>;
