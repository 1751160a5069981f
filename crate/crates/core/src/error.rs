use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("byte 0x{byte:02x} is not a symbol of the declared alphabet")]
    SymbolNotInAlphabet { byte: u8 },

    #[error("rank {rank} out of range for alphabet of size {sigma}")]
    RankOutOfRange { rank: u16, sigma: usize },

    #[error("rotation cut {cut} out of range for cycle of length {len}")]
    CutOutOfRange { cut: usize, len: usize },

    #[error("{op} requires a sentinel-free string")]
    SentinelNotAllowed { op: &'static str },

    #[error("{op} is only defined for binary alphabets (got sigma = {sigma})")]
    BinaryOnly { op: &'static str, sigma: usize },

    #[error("order k = {k} invalid for {op} on a word of length {len}")]
    InvalidOrder {
        op: &'static str,
        k: usize,
        len: usize,
    },

    #[error("string is already terminated")]
    AlreadyTerminated,

    #[error("{op} requires a terminated string")]
    NotTerminated { op: &'static str },

    #[error("{op} requires a non-empty input")]
    EmptyInput { op: &'static str },

    #[error("expected exactly one sentinel, found {found}")]
    SentinelCount { found: usize },

    #[error("mismatched inputs: {0}")]
    MismatchedInputs(&'static str),

    #[error("oracle refuses input of length {len} (cap {cap})")]
    OracleCapExceeded { len: usize, cap: usize },

    #[error("not a clustered-family string: {0}")]
    NotClustered(String),

    #[error("polynomial modulus must be non-zero")]
    ZeroModulus,

    #[error("polynomial degree {k} too small for {op}")]
    DegreeTooSmall { op: &'static str, k: u32 },

    #[error("polynomial constant term is zero; reciprocal would drop degree")]
    ConstantTermZero,

    #[error("primitivity of {poly} undecided: trial division budget exhausted with cofactor {cofactor}")]
    PrimitivityUndecided { poly: String, cofactor: u64 },

    #[error("{poly} is not primitive; the construction requires a primitive polynomial")]
    NotPrimitive { poly: String },

    #[error("seed state must be non-zero")]
    ZeroSeed,

    #[error("state width {got} does not match polynomial degree {want}")]
    StateWidthMismatch { got: u32, want: u32 },

    #[error("not a de Bruijn cycle: {0}")]
    NotDeBruijn(String),

    #[error("size {needed} exceeds the {what} budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("generator cross-check failed for k = {k}: {detail}")]
    CrossCheckFailed { k: u32, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
