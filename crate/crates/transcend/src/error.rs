use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input interval is not strictly positive")]
    NonPositiveInput,
    #[error("base interval is not strictly positive")]
    NonPositiveBase,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("enclosures could not be separated at {0} bits")]
    PrecisionExhausted(u32),
    #[error("the two elements are distinct conjugates")]
    ConjugatePair,
    #[error("the two elements are equal")]
    EqualInputs,
    #[error("the linear form vanishes")]
    ZeroForm,
    #[error("element is not in the span of the given basis")]
    NotInSpan,
    #[error("coordinates are rational but not integral")]
    NotIntegerCoords,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("undefined symbol `{0}` in this field")]
    UndefinedSymbol(String),
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("unsupported x: {0}")]
    UnsupportedX(String),
    #[error("parameter constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("empty parameter grid")]
    EmptyGrid,
    #[error("term ratio could not be certified below 1/2: {0}")]
    RatioNotCertified(String),
    #[error("a_n must be positive rational integers: {0}")]
    NotRationalA(String),
    #[error("field is not Galois over the rationals")]
    NotGalois,
    #[error("integrality violated: {0}")]
    IntegralityViolated(String),
    #[error("precondition violated: {0}")]
    PrecondViolated(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("term {n} exceeds the size ceiling ({bits} bits estimated)")]
    BeyondCeiling { n: u64, bits: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
