//! Error types, one enum per subsystem.

use thiserror::Error;

/// Errors raised by field construction and element arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// Two operands belong to different field instances.
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no discrete logarithm")]
    NoLogarithm,
    #[error("unsupported field: {0}")]
    Unsupported(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("element w^? = {0} is not primitive")]
    NotPrimitive(String),
    #[error("cannot parse field element `{0}`: {1}")]
    Parse(String, String),
}

/// Errors raised by codeword-level operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("codeword entries belong to different fields")]
    MixedFields,
    #[error("codewords have mixed lengths")]
    MixedLengths,
    #[error("empty input")]
    Empty,
    #[error("m={m} out of range for length n={n} (require 0 <= m <= n-1)")]
    MOutOfRange { m: usize, n: usize },
    #[error("coefficient vector is not {m}-quasi-reciprocal")]
    NotQuasiReciprocal { m: usize },
    #[error("variant {variant} precondition failed: {clause}")]
    VariantPrecondition { variant: String, clause: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Errors raised by linear-code analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("{0}")]
    Validation(String),
    /// A computed (n, k, d) triple violating the Griesmer bound signals a bug.
    #[error("internal inconsistency: [{n},{k},{d}] over GF({q}) violates the Griesmer bound (sum = {bound})")]
    GriesmerViolated {
        n: usize,
        k: usize,
        d: u32,
        q: usize,
        bound: usize,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Errors raised by DNA-side machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DnaError {
    #[error("invalid DNA symbol `{0}` (expected A, T, C or G)")]
    BadSymbol(char),
    #[error("DNA word length {len} is not a multiple of k={k}")]
    BadLength { len: usize, k: usize },
    #[error("tuple is not DNA-{m}-quasi-reciprocal")]
    NotDnaQuasiReciprocal { m: usize },
    #[error("code has {size} words, above the enumeration cap of {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("DNA words have mixed lengths")]
    MixedLengths,
    #[error("empty word set")]
    Empty,
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl From<CodeError> for DnaError {
    fn from(e: CodeError) -> Self {
        DnaError::Validation(e.to_string())
    }
}

/// Errors raised by the golden-data verification harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoldenError {
    #[error("unknown verification id `{0}`")]
    UnknownName(String),
    #[error("golden data error: {0}")]
    Data(String),
}
