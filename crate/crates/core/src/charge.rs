//! The charges `Z_t` and `Z'_t` at `D = H/2`, `F = tH`.
//!
//! For `v = (r, c, s)`:
//!
//! ```text
//! Re Z_t(v)   = −s + c·H²/2 + r·(H²/2)(t² − 1/4)
//! Im Z_t(v)/t = H²·(c − r/2)
//! Z'_t(v)     = Z_t(v) − r·χ(O_S)/2
//! ```
//!
//! `√td(S) = 1 + (χ(O_S)/2)·pt` on a K-trivial surface, so the twist subtracts
//! `r` on a K3 and nothing on an abelian surface. Real parts are affine in `t²`
//! and imaginary parts are `t` times a constant, so everything is exact at
//! rational `t²` and `t` is never formed.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{bg_bound, sharp_bound, CharVector, SurfaceData, SurfaceKind};
use crate::rational::{int, is_positive, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChargeKind {
    /// `Z = −∫ e^{−(D+iF)} ch`.
    Naive,
    /// `Z' = −∫ e^{−(D+iF)} ch √td`.
    Twisted,
}

impl ChargeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ChargeKind::Naive => "naive",
            ChargeKind::Twisted => "twisted",
        }
    }

    /// The kind recommended for a surface: twisted on K3, naive on abelian.
    pub fn default_for(surf: &SurfaceData) -> Self {
        match surf.kind() {
            SurfaceKind::K3 => ChargeKind::Twisted,
            SurfaceKind::Abelian => ChargeKind::Naive,
        }
    }
}

impl fmt::Display for ChargeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The kind whose ch₂ bounds apply. `td = 1` on abelian surfaces, so the
/// twisted charge there is the naive one, bounds included.
pub fn effective_kind(surf: &SurfaceData, kind: ChargeKind) -> ChargeKind {
    match surf.kind() {
        SurfaceKind::K3 => kind,
        SurfaceKind::Abelian => ChargeKind::Naive,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeParams {
    t_squared: Q,
    kind: ChargeKind,
}

impl ChargeParams {
    pub fn new(t_squared: Q, kind: ChargeKind) -> Result<Self> {
        if !is_positive(&t_squared) {
            return Err(Error::NonPositiveTSquared(t_squared));
        }
        Ok(ChargeParams { t_squared, kind })
    }

    pub fn t_squared(&self) -> Q {
        self.t_squared
    }

    pub fn kind(&self) -> ChargeKind {
        self.kind
    }
}

/// `Re Z` and `Im Z / t` at one value of `t²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeValue {
    pub re: Q,
    pub im_over_t: Q,
}

impl ChargeValue {
    /// Strict upper half plane or the open negative real axis.
    pub fn in_half_plane(&self) -> bool {
        is_positive(&self.im_over_t) || (self.im_over_t.is_zero() && self.re.is_negative())
    }

    pub fn has_infinite_slope(&self) -> bool {
        self.im_over_t.is_zero() && self.re.is_negative()
    }
}

impl std::ops::Neg for ChargeValue {
    type Output = ChargeValue;

    fn neg(self) -> ChargeValue {
        ChargeValue {
            re: -self.re,
            im_over_t: -self.im_over_t,
        }
    }
}

/// `Re Z = re_constant + re_slope·t²`, `Im Z / t = im_over_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineCharge {
    pub re_constant: Q,
    pub re_slope: Q,
    pub im_over_t: Q,
}

impl AffineCharge {
    pub fn of(v: &CharVector, kind: ChargeKind, surf: &SurfaceData) -> Self {
        let h2 = surf.h_squared();
        let twist = match kind {
            ChargeKind::Naive => Q::zero(),
            ChargeKind::Twisted => q(v.r * surf.chi_structure_sheaf(), 2),
        };
        AffineCharge {
            re_constant: int(-v.s) + q(v.c * h2, 2) - q(v.r * h2, 8) - twist,
            re_slope: q(v.r * h2, 2),
            im_over_t: int(v.c * h2) - q(v.r * h2, 2),
        }
    }

    pub fn at(&self, t_squared: Q) -> ChargeValue {
        ChargeValue {
            re: self.re_constant + self.re_slope * t_squared,
            im_over_t: self.im_over_t,
        }
    }
}

pub fn central_charge(v: &CharVector, p: &ChargeParams, surf: &SurfaceData) -> ChargeValue {
    AffineCharge::of(v, p.kind(), surf).at(p.t_squared())
}

fn heart_compatible(v: &CharVector, z: &ChargeValue) -> Result<()> {
    if z.in_half_plane() {
        Ok(())
    } else {
        Err(Error::NotHeartCompatible(*v))
    }
}

/// Compares `μ(v)` with `μ(w)`, `μ = −Re Z / Im Z`. Infinite slopes beat every
/// finite slope and tie with each other.
pub fn slope_compare(
    v: &CharVector,
    w: &CharVector,
    p: &ChargeParams,
    surf: &SurfaceData,
) -> Result<Ordering> {
    let zv = central_charge(v, p, surf);
    let zw = central_charge(w, p, surf);
    heart_compatible(v, &zv)?;
    heart_compatible(w, &zw)?;
    Ok(match (zv.has_infinite_slope(), zw.has_infinite_slope()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        // μ(v) − μ(w) has the sign of Re(w)·Im(v) − Re(v)·Im(w); the common t cancels.
        (false, false) => (zw.re * zv.im_over_t).cmp(&(zv.re * zw.im_over_t)),
    })
}

/// The building blocks of the heart `A#` at `D = H/2`, as numerical classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    /// Torsion supported in dimension zero: `r = c = 0`, `s > 0`.
    Torsion0,
    /// Torsion supported on curves: `r = 0`, `c > 0`.
    Torsion1,
    /// H-stable torsion-free with `μ_H > H²/2`: `r ≥ 1`, `c/r > 1/2`.
    StableAbove,
    /// H-stable torsion-free with `μ_H ≤ H²/2`, entering the heart as `E[1]`.
    /// Takes the unshifted class: `r ≥ 1`, `c/r ≤ 1/2`.
    StableBelowShifted,
}

impl StabilityClass {
    fn admits(self, v: &CharVector) -> bool {
        match self {
            StabilityClass::Torsion0 => v.r == 0 && v.c == 0 && v.s > 0,
            StabilityClass::Torsion1 => v.r == 0 && v.c > 0,
            StabilityClass::StableAbove => v.r >= 1 && 2 * v.c > v.r,
            StabilityClass::StableBelowShifted => v.r >= 1 && 2 * v.c <= v.r,
        }
    }
}

/// Largest ch₂ an H-stable sheaf of rank `r`, `c₁ = cH` may have under the
/// bound the charge kind relies on: Bogomolov–Gieseker for the naive charge,
/// the integral K3 bound for the twisted one.
pub fn ch2_ceiling(r: i64, c: i64, surf: &SurfaceData, kind: ChargeKind) -> Result<Q> {
    match effective_kind(surf, kind) {
        ChargeKind::Naive => bg_bound(r, c, surf),
        ChargeKind::Twisted => sharp_bound(r, c, surf).map(int),
    }
}

/// Checks that a numerical class of the given type maps into the half plane.
///
/// In the boundary case `c/r = 1/2` of [`StabilityClass::StableBelowShifted`]
/// the given `s` is ignored and the worst case allowed by [`ch2_ceiling`] is
/// used; the unshifted real part must then be strictly positive.
pub fn verify_positivity(
    v: &CharVector,
    class: StabilityClass,
    p: &ChargeParams,
    surf: &SurfaceData,
) -> Result<bool> {
    if !class.admits(v) {
        return Err(Error::ClassMismatch { class, vector: *v });
    }
    let z = central_charge(v, p, surf);
    Ok(match class {
        StabilityClass::Torsion0 | StabilityClass::Torsion1 | StabilityClass::StableAbove => {
            z.in_half_plane()
        }
        StabilityClass::StableBelowShifted if 2 * v.c < v.r => (-z).in_half_plane(),
        StabilityClass::StableBelowShifted => {
            let worst_s = ch2_ceiling(v.r, v.c, surf, p.kind())?;
            let affine = AffineCharge::of(&CharVector { s: 0, ..*v }, p.kind(), surf);
            let re = affine.re_constant - worst_s + affine.re_slope * p.t_squared();
            is_positive(&re)
        }
    })
}

/// Infimum of `t²` above which `(Z_t, A#)` or `(Z'_t, A#)` is a slope function.
///
/// Only the twisted charge on an even-genus K3 is constrained: the rank-2,
/// `c₁ = H` class then has `Re Z'_t ≥ t²H² − 1/2`, vanishing at `1/(4g − 4)`.
pub fn slope_function_floor(surf: &SurfaceData, kind: ChargeKind) -> Q {
    match (effective_kind(surf, kind), surf.genus()) {
        (ChargeKind::Twisted, Some(g)) if g % 2 == 0 => q(1, 4 * g - 4),
        _ => Q::zero(),
    }
}
