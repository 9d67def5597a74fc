use thiserror::Error;

use crate::interval_poset::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{what} is capped at {max}, got {requested}")]
    Capacity {
        what: &'static str,
        requested: usize,
        max: usize,
    },

    #[error("invalid interval-poset: {0}")]
    InvalidPoset(#[from] Violation),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn check_size(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::SizeMismatch { left, right })
        }
    }

    pub(crate) fn check_capacity(what: &'static str, requested: usize, max: usize) -> Result<()> {
        if requested <= max {
            Ok(())
        } else {
            Err(Error::Capacity {
                what,
                requested,
                max,
            })
        }
    }
}
