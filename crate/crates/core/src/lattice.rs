//! Numerical data of a Picard-rank-one K-trivial surface and its Chern lattice.
//!
//! With `Pic(S) = ℤ·H` every Chern character is `(r, c·H, s·pt)` for integers
//! `r, c, s`; `s` is integral because `H²` is even on these surfaces.

use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::rational::{floor_int, int, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    K3,
    Abelian,
}

impl SurfaceKind {
    /// Smallest allowed genus (K3) or polarization degree (abelian).
    pub fn minimum_parameter(self) -> i64 {
        match self {
            SurfaceKind::K3 => 2,
            SurfaceKind::Abelian => 1,
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::K3 => f.write_str("K3"),
            SurfaceKind::Abelian => f.write_str("abelian"),
        }
    }
}

/// Numerical type of the surface: a K3 of genus `g` (`H² = 2g − 2`) or an
/// abelian surface with a `(1, D)` polarization (`H² = 2D`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceData {
    kind: SurfaceKind,
    parameter: i64,
    h_squared: i64,
    chi_structure_sheaf: i64,
}

impl SurfaceData {
    pub fn new(kind: SurfaceKind, parameter: i64) -> Result<Self> {
        let minimum = kind.minimum_parameter();
        if parameter < minimum {
            return Err(Error::ParameterBelowMinimum {
                kind,
                parameter,
                minimum,
            });
        }
        let (h_squared, chi_structure_sheaf) = match kind {
            SurfaceKind::K3 => (2 * parameter - 2, 2),
            SurfaceKind::Abelian => (2 * parameter, 0),
        };
        Ok(SurfaceData {
            kind,
            parameter,
            h_squared,
            chi_structure_sheaf,
        })
    }

    pub fn k3(genus: i64) -> Result<Self> {
        Self::new(SurfaceKind::K3, genus)
    }

    pub fn abelian(polarization: i64) -> Result<Self> {
        Self::new(SurfaceKind::Abelian, polarization)
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    /// Genus `g` for a K3, polarization degree `D` for an abelian surface.
    pub fn parameter(&self) -> i64 {
        self.parameter
    }

    pub fn genus(&self) -> Option<i64> {
        (self.kind == SurfaceKind::K3).then_some(self.parameter)
    }

    pub fn polarization(&self) -> Option<i64> {
        (self.kind == SurfaceKind::Abelian).then_some(self.parameter)
    }

    pub fn h_squared(&self) -> i64 {
        self.h_squared
    }

    /// `H²/2`, an integer on both kinds of surface.
    pub fn half_h_squared(&self) -> i64 {
        self.h_squared / 2
    }

    pub fn chi_structure_sheaf(&self) -> i64 {
        self.chi_structure_sheaf
    }

    pub fn is_k3(&self) -> bool {
        self.kind == SurfaceKind::K3
    }
}

impl fmt::Display for SurfaceData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SurfaceKind::K3 => write!(f, "K3 g={} (H²={})", self.parameter, self.h_squared),
            SurfaceKind::Abelian => {
                write!(f, "abelian D={} (H²={})", self.parameter, self.h_squared)
            }
        }
    }
}

/// Chern character `(r, c·H, s·pt)`. Negative ranks are allowed: shifts
/// `E[1]` negate the whole vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharVector {
    pub r: i64,
    pub c: i64,
    pub s: i64,
}

impl CharVector {
    pub fn new(r: i64, c: i64, s: i64) -> Result<Self> {
        if r == 0 && c == 0 && s == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(CharVector { r, c, s })
    }

    /// `ch(i_* L_C)` for a degree-`H²` line bundle on a curve `C ∈ |H|`: `(0, 1, H²/2)`.
    pub fn curve_class(surf: &SurfaceData) -> Self {
        CharVector {
            r: 0,
            c: 1,
            s: surf.half_h_squared(),
        }
    }

    /// `ch(I_Z(H))` for `Z` of length `d`: `(1, 1, H²/2 − d)`.
    pub fn twisted_ideal(surf: &SurfaceData, d: i64) -> Self {
        CharVector {
            r: 1,
            c: 1,
            s: surf.half_h_squared() - d,
        }
    }

    /// `ch(I_Z)` for `Z` of length `d`.
    pub fn ideal(d: i64) -> Self {
        CharVector { r: 1, c: 0, s: -d }
    }

    /// `ch(I_W^∨[1])` for `W` of length `d`.
    pub fn shifted_dual_ideal(d: i64) -> Self {
        CharVector { r: -1, c: 0, s: d }
    }

    pub fn point() -> Self {
        CharVector { r: 0, c: 0, s: 1 }
    }

    pub fn scale(self, k: i64) -> Self {
        CharVector {
            r: self.r * k,
            c: self.c * k,
            s: self.s * k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.c == 0 && self.s == 0
    }
}

impl Neg for CharVector {
    type Output = CharVector;

    fn neg(self) -> CharVector {
        self.scale(-1)
    }
}

impl std::ops::Add for CharVector {
    type Output = CharVector;

    fn add(self, o: CharVector) -> CharVector {
        CharVector {
            r: self.r + o.r,
            c: self.c + o.c,
            s: self.s + o.s,
        }
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.s)
    }
}

/// `χ(E, F) = Σ (−1)^i ext^i(E, F)` by Riemann–Roch on a K-trivial surface:
/// `r_v s_w + r_w s_v − c_v c_w H² + χ(O_S) r_v r_w`.
pub fn euler_pairing(v: &CharVector, w: &CharVector, surf: &SurfaceData) -> i64 {
    v.r * w.s + w.r * v.s - v.c * w.c * surf.h_squared() + surf.chi_structure_sheaf() * v.r * w.r
}

/// Expected dimension `2 − χ(v, v)` of a moduli space of objects of class `v`.
pub fn moduli_dimension(v: &CharVector, surf: &SurfaceData) -> i64 {
    2 - euler_pairing(v, v, surf)
}

/// Bogomolov–Gieseker ceiling `c²H²/(2r)` for ch₂ of an H-stable sheaf.
pub fn bg_bound(r: i64, c: i64, surf: &SurfaceData) -> Result<Q> {
    if r < 1 {
        return Err(Error::NonPositiveRank(r));
    }
    Ok(q(c * c * surf.h_squared(), 2 * r))
}

/// Integral ch₂ ceiling for H-stable sheaves.
///
/// On a K3, `χ(E ⊗ E*) ≤ 2` gives `ch₂ ≤ c²H²/(2r) − r + 1/r`, then integrality
/// of `deg ch₂` takes the floor. On abelian surfaces the Riemann–Roch bound
/// coincides with Bogomolov–Gieseker, so only integrality sharpens it.
pub fn sharp_bound(r: i64, c: i64, surf: &SurfaceData) -> Result<i64> {
    let bg = bg_bound(r, c, surf)?;
    let ceiling = match surf.kind() {
        SurfaceKind::K3 => bg - int(r) + q(1, r),
        SurfaceKind::Abelian => bg,
    };
    Ok(floor_int(&ceiling))
}
