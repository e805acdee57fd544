//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the ideal text grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown variable `{name}` at byte {at}")]
    UnknownVariable { name: String, at: usize },
    #[error("malformed token at byte {at}: {detail}")]
    Malformed { at: usize, detail: String },
    #[error("negative exponent at byte {at}")]
    NegativeExponent { at: usize },
}

/// Errors from decomposition-facing operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    /// Decompositions are only defined for proper ideals.
    #[error("the unit ideal has no decomposition")]
    UnitIdeal,
    /// Operations such as `bight` need a nonzero ideal.
    #[error("operation is not defined for the zero ideal")]
    ZeroIdeal,
    /// A candidate primary component failed validation against its prime.
    #[error("ideal is not primary to the given prime")]
    NotPrimary,
}

/// Errors from the maximal-embedded-component predicate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaxEmbeddedError {
    #[error("prime is not an embedded prime of the ideal")]
    NotEmbedded,
    /// The candidate did not pass the mix-and-match membership test; this is
    /// reported as "not verified", not as a proof of non-membership.
    #[error("candidate component could not be verified to appear in an irredundant primary decomposition")]
    MembershipNotVerified,
}

/// Errors from exact polynomial fitting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("need at least {need} values to fit, got {got}")]
    InsufficientData { need: usize, got: usize },
    #[error("sequence did not stabilize to a polynomial over the given window")]
    NotStabilized,
}

/// Errors from power scans.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("generator cap {cap} exceeded at power {n}")]
    GeneratorCap { cap: usize, n: u32 },
    #[error("sequence did not stabilize within n_max = {n_max}")]
    NotStabilized { n_max: u32 },
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

/// Errors from corpus files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}: {detail}")]
    Malformed { line: usize, detail: String },
    #[error("line {line}: duplicate entry name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Ideal {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("corpus file declares no variables")]
    MissingHeader,
}

/// Errors from corpus generation specs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("degenerate corpus spec: {0}")]
    Degenerate(String),
}
