use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance mismatch: `{left}` vs `{right}`")]
    InstanceMismatch { left: String, right: String },

    #[error("tomonoid domain mismatch: `{left}` vs `{right}`")]
    DomainMismatch { left: String, right: String },

    #[error("unknown semiring descriptor `{0}`")]
    UnknownDescriptor(String),

    #[error("unknown valuation rule `{0}`")]
    UnknownRule(String),

    #[error("invalid semiring descriptor `{descriptor}`: {reason}")]
    InvalidDescriptor { descriptor: String, reason: String },

    #[error("valuation rule `{rule}` does not apply to `{semiring}`")]
    RuleNotApplicable { rule: String, semiring: String },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("`{value}` is not a valid element of `{semiring}`: {reason}")]
    NotInCarrier {
        value: String,
        semiring: String,
        reason: String,
    },

    #[error("`{0}` has no multiplicative inverse")]
    NotInvertible(String),

    #[error("`{0}` has no ideal membership oracle")]
    NoOracle(String),

    #[error("the ideal is the whole semiring")]
    WholeIdeal,

    #[error("the ideal is the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined on the zero element")]
    ZeroElement,

    #[error("{0}")]
    InvalidArgument(String),
}
