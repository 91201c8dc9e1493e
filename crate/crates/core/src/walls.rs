//! Walls in `t²` for the curve class `(0, H, H²/2)`, the chamber picture
//! above the validity floor, and a brute-force cross-check.
//!
//! Two slopes agree where `Re Z(v)·Im Z(w) = Re Z(w)·Im Z(v)`. Real parts are
//! affine in `t²` and imaginary parts are `t` times a constant, so every wall
//! is the root of a linear equation in `t²`.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::charge::{
    ch2_ceiling, effective_kind, slope_function_floor, AffineCharge, ChargeKind, ChargeParams,
};
use crate::error::{Error, Result};
use crate::lattice::{CharVector, SurfaceData};
use crate::par::{map_ordered, Execution};
use crate::rational::{floor_int, int, is_positive, q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WallLabel {
    /// `I_Z(H)` with `len Z = d` reaches slope zero.
    RankOne {
        d: i64,
    },
    /// The first wall where a rank-`rank` sheaf with `c₁ = (rank+1)/2·H` and
    /// maximal ch₂ can destabilize.
    HigherRank {
        rank: i64,
    },
    Pairwise {
        v: CharVector,
        w: CharVector,
    },
}

impl WallLabel {
    fn sort_key(&self) -> (u8, i64, CharVector, CharVector) {
        let zero = CharVector { r: 0, c: 0, s: 0 };
        match self {
            WallLabel::RankOne { d } => (0, *d, zero, zero),
            WallLabel::HigherRank { rank } => (1, *rank, zero, zero),
            WallLabel::Pairwise { v, w } => (2, 0, *v, *w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Wall {
    pub t_squared: Q,
    pub label: WallLabel,
    /// Classes whose slopes coincide at `t_squared`.
    pub colliding_classes: Vec<CharVector>,
}

/// Descending `t²`, then label.
pub fn wall_order(a: &Wall, b: &Wall) -> Ordering {
    b.t_squared
        .cmp(&a.t_squared)
        .then_with(|| a.label.sort_key().cmp(&b.label.sort_key()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairWall {
    /// Slopes agree exactly at this `t²`, above the slope-function floor.
    At(Q),
    /// The slope-equality root exists but is not above the slope-function floor
    /// (or not positive).
    BelowFloor(Q),
    /// The classes have equal slope for every `t`.
    Proportional,
    /// Slopes never agree.
    NoWall,
}

impl PairWall {
    pub fn t_squared(&self) -> Option<Q> {
        match self {
            PairWall::At(t2) => Some(*t2),
            _ => None,
        }
    }
}

/// Solves slope equality between two heart-compatible classes.
pub fn pair_wall(
    v: &CharVector,
    w: &CharVector,
    surf: &SurfaceData,
    kind: ChargeKind,
) -> Result<PairWall> {
    let zv = AffineCharge::of(v, kind, surf);
    let zw = AffineCharge::of(w, kind, surf);
    for (x, z) in [(v, &zv), (w, &zw)] {
        if z.im_over_t < Q::zero() {
            return Err(Error::NotHeartCompatible(*x));
        }
    }
    match (zv.im_over_t.is_zero(), zw.im_over_t.is_zero()) {
        (true, true) => return Ok(PairWall::Proportional),
        // Im Z = 0 for one class: slopes could only agree where that class
        // leaves the heart cone.
        (true, false) | (false, true) => return Ok(PairWall::NoWall),
        (false, false) => {}
    }
    // (a_v + b_v T) m_w = (a_w + b_w T) m_v
    let coefficient = zv.re_slope * zw.im_over_t - zw.re_slope * zv.im_over_t;
    let rhs = zw.re_constant * zv.im_over_t - zv.re_constant * zw.im_over_t;
    if coefficient.is_zero() {
        return Ok(if rhs.is_zero() {
            PairWall::Proportional
        } else {
            PairWall::NoWall
        });
    }
    let t_squared = rhs / coefficient;
    let floor = slope_function_floor(surf, kind);
    Ok(if is_positive(&t_squared) && t_squared > floor {
        PairWall::At(t_squared)
    } else {
        PairWall::BelowFloor(t_squared)
    })
}

/// Closed-form `t_d²` where `I_Z(H)` (length `d`) meets slope zero, with no
/// floor applied.
///
/// Naive: `1/4 − 2d/H²`. Twisted on a K3: `((g + 3)/4 − d)/(g − 1)`.
pub fn rank_one_wall_value(d: i64, surf: &SurfaceData, kind: ChargeKind) -> Q {
    match (effective_kind(surf, kind), surf.genus()) {
        (ChargeKind::Twisted, Some(g)) => (q(g + 3, 4) - int(d)) / int(g - 1),
        _ => q(1, 4) - q(2 * d, surf.h_squared()),
    }
}

fn rank_one_wall(d: i64, t_squared: Q, surf: &SurfaceData) -> Wall {
    Wall {
        t_squared,
        label: WallLabel::RankOne { d },
        colliding_classes: vec![
            CharVector::twisted_ideal(surf, d),
            CharVector::curve_class(surf),
            CharVector::shifted_dual_ideal(d),
        ],
    }
}

fn rank_one_series(surf: &SurfaceData, kind: ChargeKind) -> (Vec<Wall>, Vec<Wall>) {
    let floor = chamber_floor(surf, kind);
    let mut above = Vec::new();
    let mut at_floor = Vec::new();
    for d in 0.. {
        let t2 = rank_one_wall_value(d, surf, kind);
        if t2 > floor {
            above.push(rank_one_wall(d, t2, surf));
        } else {
            if t2 == floor && is_positive(&floor) {
                at_floor.push(rank_one_wall(d, t2, surf));
            }
            break;
        }
    }
    (above, at_floor)
}

/// Rank-one walls strictly above the chamber floor, descending in `t²`.
pub fn rank_one_walls(surf: &SurfaceData, kind: ChargeKind) -> Vec<Wall> {
    rank_one_series(surf, kind).0
}

/// Largest `t²` at which a rank `2n + 1`, `c₁ = (n + 1)H` class with maximal
/// allowed ch₂ reaches `Re Z = 0`. The naive value is `1/(4(2n + 1)²)`. May be
/// non-positive, meaning no such wall at any `t > 0`.
pub fn rank_threshold(n: i64, surf: &SurfaceData, kind: ChargeKind) -> Result<Q> {
    if n < 1 {
        return Err(Error::InvalidRankIndex(n));
    }
    let (r, c) = (2 * n + 1, n + 1);
    let s_max = ch2_ceiling(r, c, surf, kind)?;
    let z = AffineCharge::of(&CharVector { r, c, s: 0 }, effective_kind(surf, kind), surf);
    Ok(-(z.re_constant - s_max) / z.re_slope)
}

/// Largest `rank_threshold(n)` over all `n ≥ 1`. With the naive charge the
/// thresholds are `1/(4r²)`, so this is `1/36`. With the twisted charge on a
/// K3 of genus `g` the rounding in the sharp ch₂ bound makes them
/// non-monotone, but they are positive only for `r = 2n + 1 ≤ g + 3`.
pub fn higher_rank_floor(surf: &SurfaceData, kind: ChargeKind) -> Q {
    let max_n = match (effective_kind(surf, kind), surf.genus()) {
        (ChargeKind::Twisted, Some(g)) => ((g + 2) / 2).max(1),
        _ => 1,
    };
    (1..=max_n)
        .map(|n| rank_threshold(n, surf, kind).expect("n >= 1"))
        .max()
        .expect("non-empty")
}

/// `HigherRank` walls for ranks `3, 5, …, 2·max_n + 1` that sit at positive `t²`.
pub fn higher_rank_walls(surf: &SurfaceData, kind: ChargeKind, max_n: i64) -> Vec<Wall> {
    (1..=max_n)
        .filter_map(|n| {
            let t2 = rank_threshold(n, surf, kind).ok()?;
            is_positive(&t2).then(|| Wall {
                t_squared: t2,
                label: WallLabel::HigherRank { rank: 2 * n + 1 },
                colliding_classes: vec![CharVector::curve_class(surf)],
            })
        })
        .collect()
}

/// `max(0, slope-function floor, higher-rank floor)`.
pub fn chamber_floor(surf: &SurfaceData, kind: ChargeKind) -> Q {
    Q::zero()
        .max(slope_function_floor(surf, kind))
        .max(higher_rank_floor(surf, kind))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub lower: Q,
    /// `None` for the unbounded top chamber.
    pub upper: Option<Q>,
    pub sample_t_squared: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberReport {
    pub surface: SurfaceData,
    pub kind: ChargeKind,
    pub floor: Q,
    /// Strictly descending, all above `floor`.
    pub walls: Vec<Wall>,
    /// Rank-one walls landing exactly on a positive floor; excluded from `walls`.
    pub boundary_walls: Vec<Wall>,
    /// Bottom to top.
    pub chambers: Vec<Chamber>,
}

pub fn chamber_decomposition(surf: &SurfaceData, kind: ChargeKind) -> ChamberReport {
    let floor = chamber_floor(surf, kind);
    let (walls, boundary_walls) = rank_one_series(surf, kind);

    let mut cuts: Vec<Q> = vec![floor];
    cuts.extend(walls.iter().rev().map(|w| w.t_squared));
    let mut chambers: Vec<Chamber> = cuts
        .windows(2)
        .map(|pair| Chamber {
            lower: pair[0],
            upper: Some(pair[1]),
            sample_t_squared: (pair[0] + pair[1]) / int(2),
        })
        .collect();
    let top = *cuts.last().expect("cuts starts with the floor");
    chambers.push(Chamber {
        lower: top,
        upper: None,
        sample_t_squared: top + int(1),
    });

    ChamberReport {
        surface: *surf,
        kind,
        floor,
        walls,
        boundary_walls,
        chambers,
    }
}

fn check_target(target: &CharVector, surf: &SurfaceData) -> Result<()> {
    let expected = CharVector::curve_class(surf);
    if *target != expected {
        return Err(Error::UnsupportedTarget {
            expected,
            actual: *target,
        });
    }
    Ok(())
}

fn odd_ranks(rank_cap: i64) -> Result<Vec<i64>> {
    if rank_cap < 1 || rank_cap % 2 == 0 {
        return Err(Error::InvalidRankCap(rank_cap));
    }
    Ok((1..=rank_cap).step_by(2).collect())
}

/// Numerically allowed destabilizing quotients of the curve class at `p`:
/// `(2n + 1, n + 1, s)` with `s` within the ch₂ ceiling and `Re Z < 0`.
///
/// Ordered by rank, then `s` descending. Rank-one entries are `I_Y(H)` with
/// `len Y = H²/2 − s`.
pub fn destabilizer_candidates(
    target: &CharVector,
    p: &ChargeParams,
    surf: &SurfaceData,
    rank_cap: i64,
) -> Result<Vec<CharVector>> {
    destabilizer_candidates_with(Execution::default(), target, p, surf, rank_cap)
}

pub fn destabilizer_candidates_with(
    exec: Execution,
    target: &CharVector,
    p: &ChargeParams,
    surf: &SurfaceData,
    rank_cap: i64,
) -> Result<Vec<CharVector>> {
    check_target(target, surf)?;
    let ranks = odd_ranks(rank_cap)?;
    let floor = slope_function_floor(surf, p.kind());
    if p.t_squared() <= floor {
        return Err(Error::BelowValidityFloor {
            t_squared: p.t_squared(),
            floor,
        });
    }
    let per_rank = map_ordered(&ranks, exec, |&r| -> Result<Vec<CharVector>> {
        let c = (r + 1) / 2;
        let s_max = floor_int(&ch2_ceiling(r, c, surf, p.kind())?);
        let z = AffineCharge::of(&CharVector { r, c, s: 0 }, p.kind(), surf);
        // Re Z = z.re_constant − s + z.re_slope·t² < 0  ⟺  s > z.at(t²).re
        let s_min = floor_int(&z.at(p.t_squared()).re) + 1;
        Ok((s_min..=s_max)
            .rev()
            .map(|s| CharVector { r, c, s })
            .collect())
    });
    let mut out = Vec::new();
    for chunk in per_rank {
        out.extend(chunk?);
    }
    Ok(out)
}

/// Brute-force wall set for the curve class.
///
/// Every class of odd rank `r = 2n + 1 ≤ rank_cap` with `c ∈ {n, n + 1}` is
/// scanned from its ch₂ ceiling downward (shifted into the heart when its
/// imaginary part is negative), and its wall against `target` is solved with
/// [`pair_wall`]. Walls fall monotonically as `s` decreases; a family's scan
/// stops after `s_margin + 1` consecutive values without a wall above the
/// chamber floor. Returns the distinct walls above the floor, descending.
pub fn oracle_walls(
    target: &CharVector,
    surf: &SurfaceData,
    kind: ChargeKind,
    rank_cap: i64,
    s_margin: i64,
) -> Result<Vec<Q>> {
    oracle_walls_with(Execution::default(), target, surf, kind, rank_cap, s_margin)
}

pub fn oracle_walls_with(
    exec: Execution,
    target: &CharVector,
    surf: &SurfaceData,
    kind: ChargeKind,
    rank_cap: i64,
    s_margin: i64,
) -> Result<Vec<Q>> {
    check_target(target, surf)?;
    let floor = chamber_floor(surf, kind);
    let families: Vec<(i64, i64)> = odd_ranks(rank_cap)?
        .into_iter()
        .flat_map(|r| [(r, (r - 1) / 2), (r, (r + 1) / 2)])
        .collect();

    let scans = map_ordered(&families, exec, |&(r, c)| -> Result<Vec<Q>> {
        let mut found = Vec::new();
        let mut s = floor_int(&ch2_ceiling(r, c, surf, kind)?);
        let mut misses = 0;
        while misses <= s_margin.max(0) {
            let class = CharVector { r, c, s };
            let class = if 2 * c - r < 0 { -class } else { class };
            match pair_wall(target, &class, surf, kind)? {
                PairWall::At(t2) if t2 > floor => {
                    found.push(t2);
                    misses = 0;
                }
                _ => misses += 1,
            }
            s -= 1;
        }
        Ok(found)
    });

    let mut walls = Vec::new();
    for scan in scans {
        walls.extend(scan?);
    }
    walls.sort_by(|a, b| b.cmp(a));
    walls.dedup();
    Ok(walls)
}
