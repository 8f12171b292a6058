use thiserror::Error;

/// Parse failures for the text interchange formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("missing header line")]
    MissingHeader,
    #[error("bad header line: {0:?}")]
    BadHeader(String),
    #[error("body ends after {found_rows} of {expected_rows} rows")]
    TruncatedBody { expected_rows: usize, found_rows: usize },
    #[error("row {row}: unparsable entry {token:?}")]
    BadEntry { row: usize, token: String },
    #[error("row {row}: column {col} out of range (cols={cols})")]
    ColumnOutOfRange { row: usize, col: usize, cols: usize },
    #[error("row {row}: column indices must be strictly ascending")]
    UnsortedRow { row: usize },
    #[error("line {line}: {message}")]
    BadLine { line: usize, message: String },
}

/// Failures of the random graph generators.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("degree sequence is unrealizable: {0}")]
    UnrealizableDegrees(String),
    #[error("no connected graph found within {attempts} resampling attempts")]
    ResampleLimit { attempts: usize },
    #[error("graph must be connected")]
    Disconnected,
}

/// Failures of code constructors.
#[derive(Debug, Error)]
pub enum CodeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("block length must be at least 2, got {0}")]
    BlockTooShort(usize),
    #[error("tiling generation must be at least {min}, got {got}")]
    GenerationTooSmall { min: usize, got: usize },
    #[error("depletion period must be at least 2, got {0}")]
    DepletionPeriodTooSmall(usize),
    #[error("Tanner graph must have fewer checks than bits (m={m}, n={n})")]
    NotUnderdetermined { m: usize, n: usize },
    #[error("missing parameter {0:?}")]
    MissingParameter(&'static str),
    #[error("parameter {name:?}: {message}")]
    BadParameter { name: String, message: String },
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
}

/// Failures of CSS product constructions.
#[derive(Debug, Error)]
pub enum CssError {
    #[error("X and Z checks do not commute: H_X H_Z^T has {nonzero} nonzero entries")]
    CommutationViolation { nonzero: usize },
    #[error("protographs disagree on dimension or modulus: ({0}, {1}) vs ({2}, {3})")]
    ProtographMismatch(usize, usize, usize, usize),
    #[error("unknown model {0:?}")]
    UnknownModel(String),
    #[error("the chain condition failed: boundary composition is nonzero")]
    ChainConditionViolation,
}

/// Failures while running diagnostics.
#[derive(Debug, Error)]
pub enum DiagnosticsError {
    #[error("trial {trial} of ensemble {ensemble:?} failed")]
    TrialFailed {
        ensemble: String,
        trial: usize,
        #[source]
        source: CodeError,
    },
    #[error("biased sampling needs a code with at least one codeword")]
    EmptyKernel,
    #[error("biased sampling needs a stored minimum-weight witness")]
    MissingWitness,
}
