use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: domain has dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point is not inside the domain")]
    OutsideDomain,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("invalid weight specification: {0}")]
    InvalidOmega(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("sampling band [{lo}, {hi}] is infeasible")]
    InfeasibleBand { lo: f64, hi: f64 },
    #[error("estimator is incompatible with the domain: {0}")]
    IncompatibleEstimator(String),
    #[error("domain boundary is not Dini-smooth")]
    NonSmooth,
    #[error("ray does not leave the domain")]
    UnboundedRay,
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("endpoints are not connected in the lattice")]
    Disconnected,
    #[error("curve leaves the domain")]
    CurveExitsDomain,
}
