use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("word `{0}` is not freely reduced")]
    NotFreelyReduced(String),

    #[error("invalid {form} form: {reason}")]
    InvalidForm { form: &'static str, reason: String },

    #[error("element of `{0}` lies outside the computed ball")]
    OutOfRadius(String),

    #[error("ball exceeds the entry limit of {limit}")]
    ResourceLimit { limit: usize },

    #[error("rewriting did not terminate within {bound} steps on `{word}`")]
    IterationGuard { word: String, bound: usize },

    #[error("automaton state {0} is live but not accepting")]
    NonAcceptingState(usize),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact over the integers")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(form: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidForm {
            form,
            reason: reason.into(),
        }
    }
}
