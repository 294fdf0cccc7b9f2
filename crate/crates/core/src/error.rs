use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The oracle only works over prime fields.
    #[error("field size {0} is not prime; the oracle supports prime q only")]
    NotPrime(u64),

    #[error("enumeration needs {required} candidates but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// A closed form produced a non-integral or negative count.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
