use thiserror::Error;

use crate::types::Model;

/// Errors raised by geometry operations.
///
/// Mixing models is always a hard error, never a silent cast: facts about one
/// model do not transfer to the other, so the library refuses to guess.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("model mismatch: expected {expected:?}, found {found:?}")]
    ModelMismatch { expected: Model, found: Model },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("half-plane point requires v > 0, got v = {v}")]
    OutsideHalfPlane { v: f64 },

    #[error("coordinates and components must be finite")]
    NonFinite,

    #[error("tangent vector is based at a different point")]
    BaseMismatch,

    #[error("curve parameter t = {t} outside [0, 1]")]
    ParameterOutOfRange { t: f64 },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("point cloud is empty")]
    EmptyCloud,

    #[error("coincident endpoints admit no unique geodesic carrier")]
    CoincidentEndpoints,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
