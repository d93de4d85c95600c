use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid root system: {0}")]
    InvalidType(String),
    #[error("node {0} out of range for rank {1}")]
    NodeOutOfRange(usize, usize),
    #[error("{what}: size {estimate} exceeds cap {cap}")]
    CapExceeded { what: String, estimate: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default enumeration cap, overridable through `WONDERKIT_CAP`.
pub fn default_cap() -> u128 {
    std::env::var("WONDERKIT_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(10_000_000)
}
