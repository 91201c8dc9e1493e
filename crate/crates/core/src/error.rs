use thiserror::Error;

use crate::charge::StabilityClass;
use crate::lattice::{CharVector, SurfaceKind};
use crate::rational::Q;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{kind} surfaces need a parameter of at least {minimum}, got {parameter}")]
    ParameterBelowMinimum {
        kind: SurfaceKind,
        parameter: i64,
        minimum: i64,
    },

    #[error("the zero vector is not a Chern character")]
    ZeroVector,

    #[error("ch₂ bounds apply to sheaves of positive rank, got rank {0}")]
    NonPositiveRank(i64),

    #[error("t² must be positive, got {0}")]
    NonPositiveTSquared(Q),

    #[error("t² = {t_squared} is not above the slope-function floor {floor}")]
    BelowValidityFloor { t_squared: Q, floor: Q },

    #[error("class {0} is not heart-compatible (needs Im/t > 0, or Im = 0 with Re < 0)")]
    NotHeartCompatible(CharVector),

    #[error("class {vector} does not match the declared {class:?} class")]
    ClassMismatch {
        class: StabilityClass,
        vector: CharVector,
    },

    #[error("destabilizer analysis is only defined for the curve class {expected}, got {actual}")]
    UnsupportedTarget {
        expected: CharVector,
        actual: CharVector,
    },

    #[error("rank cap must be a positive odd integer, got {0}")]
    InvalidRankCap(i64),

    #[error("higher-rank index n must be at least 1, got {0}")]
    InvalidRankIndex(i64),

    #[error("extension fiber for d = {d} has negative dimension {fiber}")]
    NegativeFiber { d: i64, fiber: i64 },

    #[error("{0} is only available on K3 surfaces")]
    K3Only(&'static str),
}
