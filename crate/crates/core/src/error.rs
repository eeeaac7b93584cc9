use thiserror::Error;

/// Errors raised by the quasi-set operations.
///
/// Every variant corresponds to a diagnostic code surfaced by the DSL, so the
/// set is deliberately flat.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsetError {
    /// `=` applied to an m-atom: identity is not a formula for m-atoms.
    #[error("extensional equality is not defined for m-atom `m:{species}`")]
    IllFormedIdentity { species: String },

    #[error("count {count} of `{class}` exceeds the {available} available in the universe")]
    CountExceedsUniverse {
        class: String,
        count: u64,
        available: u64,
    },

    #[error("unknown m-atom species `{0}`")]
    UnknownSpecies(String),

    #[error("unknown M-atom label `{0}`")]
    UnknownLabel(String),

    #[error("no element of the quasi-set is indistinguishable from `{0}`")]
    NoIndistinguishableElement(String),

    #[error("requested sub-quasi-set of quasi-cardinal {beta}, but the quasi-set has only {qc}")]
    BetaExceedsQc { beta: u64, qc: u64 },

    #[error("2^{exponent} does not fit in a 64-bit cardinal")]
    Overflow { exponent: u64 },

    #[error("exhaustive harness supports multiplicities up to {max}, got {requested}")]
    HarnessBound { requested: u64, max: u64 },
}

pub type Result<T, E = QsetError> = std::result::Result<T, E>;

/// Errors raised while loading a universe declaration file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: `{name}` is already declared")]
    Duplicate { line: usize, name: String },

    #[error("line {line}: species `{name}` must have multiplicity at least 1")]
    EmptySpecies { line: usize, name: String },
}

impl UniverseError {
    pub fn line(&self) -> usize {
        match self {
            UniverseError::Syntax { line, .. }
            | UniverseError::Duplicate { line, .. }
            | UniverseError::EmptySpecies { line, .. } => *line,
        }
    }
}
