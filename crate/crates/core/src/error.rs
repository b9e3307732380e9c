use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error classes used across the crate.
///
/// `Input` and `Budget` are distinguished so that callers (the CLI in
/// particular) can map them to distinct exit codes.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the caller's data failed.
    #[error("input error: {0}")]
    Input(String),

    /// An enumeration would exceed the configured word budget.
    #[error("resource error: {what} needs {requested} words, budget is {budget} ({source_hint})")]
    Budget {
        what: &'static str,
        requested: u128,
        budget: u64,
        source_hint: String,
    },

    /// The hypothesis of the cyclic normal-form theory fails for this
    /// tuple (no invertible member), so the classifier cannot run.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    /// A structure search terminated without either finding a structure
    /// or certifying its absence.
    #[error("structure search inconclusive: {0}")]
    Unknown(String),

    /// Span closure hit its length budget before stabilizing; the
    /// dimension reached so far is a valid lower bound.
    #[error("span closure did not stabilize within length {max_len}; dimension is at least {lower_bound}")]
    PartialSpan { max_len: u32, lower_bound: usize },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
