use alloc::string::String;

/// Failures of the extended-precision primitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum XprecError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ParseXRealError {
    #[error("no digits")]
    NoDigits,
    #[error("invalid digit")]
    InvalidDigit,
    #[error("invalid exponent")]
    InvalidExponent,
    #[error("value out of range")]
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Xprec(#[from] XprecError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("orbit escaped at iterate {index} (|z| = {modulus:.3e})")]
    Escaped { index: usize, modulus: f64 },
    #[error("degenerate projection at sample {index}: {reason}")]
    DegenerateProjection { index: usize, reason: &'static str },
    #[error("projection admits no lift (branch half-width {halfwidth:.6})")]
    NoLift { halfwidth: f64 },
    #[error("R0 fit failed: {0}")]
    Fit(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
