//! Exact numerical wall-and-chamber structure for the tilt stability family
//! `(Z_t, A#)` at `D = H/2`, `F = tH` on K-trivial surfaces of Picard rank one.
//!
//! Everything here is exact: Chern data live on the rank-one lattice as integer
//! triples, and every charge, wall, and threshold is a rational in `t²`. The
//! parameter `t` itself only appears as a decimal annotation in frontends.
//!
//! Module map:
//!
//! - [`lattice`]: surface data, Chern vectors, Euler pairing, ch₂ bounds.
//! - [`charge`]: the naive and todd-twisted charges, slope comparison, positivity.
//! - [`walls`]: pairwise walls, the rank-one series, higher-rank floors, chambers,
//!   destabilizer enumeration and the brute-force wall oracle.
//! - [`geography`]: flop-locus dimensions, flop counts, vanishing thresholds.
//! - [`par`]: ordered data-parallel mapping with a sequential fallback.

pub mod charge;
pub mod error;
pub mod geography;
pub mod lattice;
pub mod par;
pub mod rational;
pub mod walls;

pub use charge::{ChargeKind, ChargeParams, ChargeValue, StabilityClass};
pub use error::{Error, Result};
pub use geography::{FlopCount, FlopRecord};
pub use lattice::{CharVector, SurfaceData, SurfaceKind};
pub use rational::Q;
pub use walls::{Chamber, ChamberReport, PairWall, Wall, WallLabel};
