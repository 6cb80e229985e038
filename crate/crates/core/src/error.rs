use thiserror::Error;

/// Errors raised when model inputs violate their domain invariants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("parameter `{name}` must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("parameter `{name}` = {value} is out of range: expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("influence price is undefined for degree of influence {delta} (must be > 0)")]
    UndefinedPrice { delta: f64 },

    #[error("simulation requires at least one round")]
    ZeroRounds,

    #[error("{0}")]
    InvalidAxis(String),
}

pub type Result<T, E = ModelError> = std::result::Result<T, E>;

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ModelError::NonFinite { name, value })
    }
}

pub(crate) fn check(
    name: &'static str,
    value: f64,
    ok: bool,
    expected: &'static str,
) -> Result<f64> {
    finite(name, value)?;
    if ok {
        Ok(value)
    } else {
        Err(ModelError::OutOfRange {
            name,
            value,
            expected,
        })
    }
}
