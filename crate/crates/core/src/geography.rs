//! Flop-locus dimensions, flop counts, and the vanishing thresholds that the
//! rank-one walls imply.
//!
//! At the `d`-th rank-one wall the destabilized objects form a projective
//! bundle `P_d` over pairs of length-`d` subschemes (times `Pic⁰ × Pic⁰` on an
//! abelian surface), with fiber `P(H⁰(I_Z ⊗ I_W(H)))`. Crossing replaces it by
//! the dual bundle; this is a Mukai flop when its codimension equals the fiber
//! dimension and is at least 2.

use crate::charge::{effective_kind, ChargeKind};
use crate::error::{Error, Result};
use crate::lattice::{SurfaceData, SurfaceKind};
use crate::rational::{ceil_int, int, largest_int_below, q, Q};
use crate::walls::{chamber_decomposition, WallLabel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlopRecord {
    pub d: i64,
    pub t_squared: Option<Q>,
    pub ambient_dim: i64,
    pub base_dim: i64,
    pub fiber_dim: i64,
    pub locus_dim: i64,
    pub codim: i64,
    pub mukai_flop: bool,
    pub divisorial: bool,
}

/// Dimensions of `P_d` inside the moduli space of the curve class.
///
/// K3: ambient `2 + H²`, base `4d`, fiber `1 + H²/2 − 2d`.
/// Abelian: ambient `2D + 2`, base `4d + 4`, fiber `D − 2d − 1`.
pub fn pd_geometry(d: i64, surf: &SurfaceData) -> Result<FlopRecord> {
    let half = surf.half_h_squared();
    let (ambient_dim, base_dim, fiber_dim) = match surf.kind() {
        SurfaceKind::K3 => (2 + surf.h_squared(), 4 * d, 1 + half - 2 * d),
        SurfaceKind::Abelian => (2 * half + 2, 4 * d + 4, half - 2 * d - 1),
    };
    if fiber_dim < 0 {
        return Err(Error::NegativeFiber {
            d,
            fiber: fiber_dim,
        });
    }
    let locus_dim = base_dim + fiber_dim;
    let codim = ambient_dim - locus_dim;
    Ok(FlopRecord {
        d,
        t_squared: None,
        ambient_dim,
        base_dim,
        fiber_dim,
        locus_dim,
        codim,
        mukai_flop: codim == fiber_dim && codim >= 2,
        divisorial: codim == 1,
    })
}

/// One record per rank-one wall above the chamber floor, descending in `t²`.
pub fn flop_sequence(surf: &SurfaceData, kind: ChargeKind) -> Result<Vec<FlopRecord>> {
    chamber_decomposition(surf, kind)
        .walls
        .iter()
        .filter_map(|w| match w.label {
            WallLabel::RankOne { d } => Some((d, w.t_squared)),
            _ => None,
        })
        .map(|(d, t2)| {
            pd_geometry(d, surf).map(|rec| FlopRecord {
                t_squared: Some(t2),
                ..rec
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlopCount {
    /// Walls actually crossed above the floor.
    pub enumerated: i64,
    /// `⌈H²/9⌉` (naive), `⌈2(g + 3)/9⌉` (twisted K3, `g > 2`), `⌈2D/9⌉` (abelian).
    pub closed_form: Option<i64>,
}

impl FlopCount {
    pub fn agrees(&self) -> Option<bool> {
        self.closed_form.map(|k| k == self.enumerated)
    }
}

pub fn closed_form_flop_count(surf: &SurfaceData, kind: ChargeKind) -> Option<i64> {
    match (effective_kind(surf, kind), surf.genus()) {
        (ChargeKind::Twisted, Some(g)) if g > 2 => Some(ceil_int(&q(2 * (g + 3), 9))),
        (ChargeKind::Twisted, Some(_)) => None,
        _ => Some(ceil_int(&q(surf.h_squared(), 9))),
    }
}

pub fn flop_count(surf: &SurfaceData, kind: ChargeKind) -> Result<FlopCount> {
    Ok(FlopCount {
        enumerated: flop_sequence(surf, kind)?.len() as i64,
        closed_form: closed_form_flop_count(surf, kind),
    })
}

/// Largest length `d` for which `H^i(I_W ⊗ I_Z(H)) = 0`, `i > 0`, is
/// guaranteed for all `Z, W` of length `d`.
///
/// Naive (and every abelian surface): `d < H²/8`. Twisted K3: `d < (g + 3)/4`
/// for odd `g`, `d < (g + 2)/4` for even `g`; for integers both agree with
/// the uniform `d < (g + 2)/4`.
pub fn vanishing_max_length(surf: &SurfaceData, kind: ChargeKind) -> i64 {
    match (effective_kind(surf, kind), surf.genus()) {
        (ChargeKind::Twisted, Some(g)) => {
            let parity_aware = if g % 2 == 1 { q(g + 3, 4) } else { q(g + 2, 4) };
            let d = largest_int_below(&parity_aware);
            debug_assert_eq!(d, largest_int_below(&q(g + 2, 4)));
            d
        }
        _ => largest_int_below(&q(surf.h_squared(), 8)),
    }
}

/// Vanishing for `d = 1` separates points and tangents, i.e. `H` is very ample.
pub fn very_ample(surf: &SurfaceData, kind: ChargeKind) -> bool {
    vanishing_max_length(surf, kind) >= 1
}

/// `t²` below which `O_S → I_{D'}(H) → i_*L_C` destabilizes `i_*L_C` when
/// `L_C = O_C(H + D − D')`: `1/4 − 2·deg D'/H²`. Non-positive values mean no
/// destabilization at any `t > 0`.
pub fn example_threshold(deg_dprime: i64, surf: &SurfaceData) -> Q {
    q(1, 4) - int(2 * deg_dprime) / int(surf.h_squared())
}

/// `(dim P^g, number of flops left after the first)` for the stable-pair
/// chain obtained by restricting the later flops to `P₀^∨ ≅ P^g`.
pub fn stable_pairs_ambient(surf: &SurfaceData) -> Result<(i64, i64)> {
    let g = surf.genus().ok_or(Error::K3Only("stable pairs"))?;
    let count = flop_count(surf, ChargeKind::Twisted)?.enumerated;
    Ok((g, count - 1))
}
