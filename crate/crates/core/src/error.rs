use thiserror::Error;

use crate::textio::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// The top-down search only handles rules with at most one positive body atom.
    #[error(
        "rule {rule} has {positives} positive body atoms; the top-down search needs at most one"
    )]
    NotLp1 { rule: usize, positives: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
