use thiserror::Error;

/// Errors raised by system construction and the engine operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid system file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),
    #[error("Coxeter matrix entry ({0},{1}) is infinite; only spherical systems are supported")]
    InfiniteEntry(String, String),
    #[error("Coxeter group is not spherical: {0}")]
    NotSpherical(String),
    #[error("Coxeter group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("simples do not form a {side} lattice: `{a}` and `{b}` have no unique {what}")]
    NotALattice {
        side: &'static str,
        what: &'static str,
        a: String,
        b: String,
    },
    #[error("simple `{simple}` has no {side} complement in Δ")]
    ComplementMissing { simple: String, side: &'static str },
    #[error("cancellation fails: `{a}` · `{b}` = `{a}` · `{c}` with `{b}` ≠ `{c}`")]
    CancellationFailure { a: String, b: String, c: String },
    #[error("declared relation `{0}` = `{1}` does not hold in the simple tables")]
    RelationMismatch(String, String),

    #[error("`{divisor}` does not {side}-divide `{dividend}`")]
    NotADivisor {
        divisor: String,
        dividend: String,
        side: &'static str,
    },
    #[error("`{0}` is not a declared parabolic subset")]
    NotAParabolic(String),
    #[error("indecomposable components of `{0}` are not declared")]
    ComponentsUndeclared(String),
    #[error("no {variant} table entry for parabolic `{parabolic}` and atom `{atom}`")]
    NuTableMissing {
        variant: &'static str,
        parabolic: String,
        atom: String,
    },
    #[error("`{element}` is not a ribbon out of `{parabolic}`")]
    NotARibbon { element: String, parabolic: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("iteration cap exceeded in {0}")]
    IterationCapExceeded(&'static str),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that describe a negative mathematical answer rather
    /// than malformed input.
    pub fn is_domain_negative(&self) -> bool {
        matches!(
            self,
            Error::NotADivisor { .. } | Error::NotARibbon { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
