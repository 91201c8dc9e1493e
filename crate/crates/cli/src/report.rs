//! JSON documents, one per command, built from engine outputs only.
//!
//! Every rational is a `"p/q"` string in lowest terms; decimal `t` values are
//! annotations controlled by `--digits`. Parsing ignores unknown keys.

use std::fmt;

use kwall_core::geography::FlopCount;
use kwall_core::rational::{format_ratio, parse_ratio, sqrt_decimal};
use kwall_core::{
    ChamberReport, CharVector, ChargeKind, FlopRecord, PairWall, SurfaceData, SurfaceKind, Wall,
    WallLabel, Q,
};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rat(pub Q);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_ratio(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_ratio(&text).map(Rat).map_err(D::Error::custom)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ratio(&self.0))
    }
}

pub type Vec3 = [i64; 3];

pub fn vec3(v: &CharVector) -> Vec3 {
    [v.r, v.c, v.s]
}

fn t_of(t2: &Q, digits: usize) -> String {
    sqrt_decimal(t2, digits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polarization: Option<i64>,
    pub h_squared: i64,
    pub chi_structure_sheaf: i64,
}

impl SurfaceJson {
    pub fn new(surf: &SurfaceData) -> Self {
        SurfaceJson {
            kind: match surf.kind() {
                SurfaceKind::K3 => "k3",
                SurfaceKind::Abelian => "abelian",
            }
            .to_string(),
            genus: surf.genus(),
            polarization: surf.polarization(),
            h_squared: surf.h_squared(),
            chi_structure_sheaf: surf.chi_structure_sheaf(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallJson {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<i64>,
    pub t2: Rat,
    pub t: String,
    pub colliding_classes: Vec<Vec3>,
}

impl WallJson {
    pub fn new(w: &Wall, digits: usize) -> Self {
        let (label, d, rank) = match &w.label {
            WallLabel::RankOne { d } => ("rank-one", Some(*d), None),
            WallLabel::HigherRank { rank } => ("higher-rank", None, Some(*rank)),
            WallLabel::Pairwise { .. } => ("pairwise", None, None),
        };
        WallJson {
            label: label.to_string(),
            d,
            rank,
            t2: Rat(w.t_squared),
            t: t_of(&w.t_squared, digits),
            colliding_classes: w.colliding_classes.iter().map(vec3).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberJson {
    pub lower: Rat,
    pub upper: Option<Rat>,
    pub sample_t2: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdJson {
    pub rank: i64,
    pub t2: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub v: Vec3,
    pub w: Vec3,
    /// `at`, `below-floor`, `proportional` or `none`.
    pub status: String,
    pub t2: Option<Rat>,
}

impl PairJson {
    pub fn new(v: &CharVector, w: &CharVector, wall: &PairWall) -> Self {
        let status = match wall {
            PairWall::At(_) => "at",
            PairWall::BelowFloor(_) => "below-floor",
            PairWall::Proportional => "proportional",
            PairWall::NoWall => "none",
        };
        PairJson {
            v: vec3(v),
            w: vec3(w),
            status: status.to_string(),
            t2: wall.t_squared().map(Rat),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInfoDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub default_charge: String,
    pub curve_class: Vec3,
    pub moduli_dimension: i64,
    pub slope_function_floor_t2: Rat,
    pub higher_rank_floor_t2: Rat,
    pub floor_t2: Rat,
    pub vanishing_max_length: i64,
    pub very_ample: bool,
    pub flop_count: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallsDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub floor_t2: Rat,
    pub floor_t: String,
    pub slope_function_floor_t2: Rat,
    pub higher_rank_floor_t2: Rat,
    pub rank_thresholds: Vec<ThresholdJson>,
    pub walls: Vec<WallJson>,
    pub boundary_walls: Vec<WallJson>,
    /// Bottom to top; the top chamber has `upper: null`.
    pub chambers: Vec<ChamberJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlopJson {
    pub d: i64,
    pub t2: Option<Rat>,
    pub t: Option<String>,
    pub ambient_dim: i64,
    pub base_dim: i64,
    pub fiber_dim: i64,
    pub locus_dim: i64,
    pub codim: i64,
    pub mukai_flop: bool,
    pub divisorial: bool,
}

impl FlopJson {
    pub fn new(r: &FlopRecord, digits: usize) -> Self {
        FlopJson {
            d: r.d,
            t2: r.t_squared.map(Rat),
            t: r.t_squared.map(|t2| t_of(&t2, digits)),
            ambient_dim: r.ambient_dim,
            base_dim: r.base_dim,
            fiber_dim: r.fiber_dim,
            locus_dim: r.locus_dim,
            codim: r.codim,
            mukai_flop: r.mukai_flop,
            divisorial: r.divisorial,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub enumerated: i64,
    pub closed_form: Option<i64>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StablePairsJson {
    pub projective_dim: i64,
    pub chain_length: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlopsDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub floor_t2: Rat,
    pub flops: Vec<FlopJson>,
    pub count: CountJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_pairs: Option<StablePairsJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthJson {
    pub d: i64,
    pub wall_t2: Rat,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleJson {
    pub deg: i64,
    pub t2: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub max_length: i64,
    pub very_ample: bool,
    /// `d = 0 ..= max_length + 1` with the rank-one wall each would need.
    pub lengths: Vec<LengthJson>,
    /// `1/4 − 2·deg/H²` for the same range of degrees.
    pub example_thresholds: Vec<ExampleJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub class: Vec3,
    pub rank: i64,
    /// Length of `Y` for rank-one quotients `I_Y(H)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizersDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub t2: Rat,
    pub t: String,
    pub target: Vec3,
    pub rank_cap: i64,
    pub candidates: Vec<CandidateJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub v: Vec3,
    pub w: Vec3,
    pub chi: i64,
    pub moduli_dimension_v: i64,
    pub moduli_dimension_w: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub rank: i64,
    pub c1: i64,
    pub bg_bound: Rat,
    pub sharp_bound: i64,
    /// The ch₂ cap the selected charge uses.
    pub ch2_ceiling: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub surface: SurfaceJson,
    pub charge: String,
    pub rank_cap: i64,
    pub margin: i64,
    pub floor_t2: Rat,
    pub oracle_t2: Vec<Rat>,
    pub chamber_t2: Vec<Rat>,
    pub missing: Vec<Rat>,
    pub extra: Vec<Rat>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Document {
    SurfaceInfo(SurfaceInfoDoc),
    Walls(WallsDoc),
    Flops(FlopsDoc),
    Vanishing(VanishingDoc),
    Destabilizers(DestabilizersDoc),
    Chi(ChiDoc),
    Bounds(BoundsDoc),
    Oracle(OracleDoc),
}

pub fn to_json(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> serde_json::Result<Document> {
    serde_json::from_str(text)
}

pub struct SurfaceInfoInputs {
    pub default_charge: ChargeKind,
    pub curve_class: CharVector,
    pub moduli_dimension: i64,
    pub slope_function_floor: Q,
    pub higher_rank_floor: Q,
    pub floor: Q,
    pub vanishing_max_length: i64,
    pub very_ample: bool,
    pub flop_count: i64,
}

pub fn surface_info_doc(surf: &SurfaceData, kind: ChargeKind, x: &SurfaceInfoInputs) -> Document {
    Document::SurfaceInfo(SurfaceInfoDoc {
        surface: SurfaceJson::new(surf),
        charge: kind.as_str().to_string(),
        default_charge: x.default_charge.as_str().to_string(),
        curve_class: vec3(&x.curve_class),
        moduli_dimension: x.moduli_dimension,
        slope_function_floor_t2: Rat(x.slope_function_floor),
        higher_rank_floor_t2: Rat(x.higher_rank_floor),
        floor_t2: Rat(x.floor),
        vanishing_max_length: x.vanishing_max_length,
        very_ample: x.very_ample,
        flop_count: x.flop_count,
    })
}

pub fn walls_doc(
    report: &ChamberReport,
    slope_function_floor: Q,
    higher_rank_floor: Q,
    thresholds: &[(i64, Q)],
    pair: Option<(CharVector, CharVector, PairWall)>,
    digits: usize,
) -> Document {
    Document::Walls(WallsDoc {
        surface: SurfaceJson::new(&report.surface),
        charge: report.kind.as_str().to_string(),
        floor_t2: Rat(report.floor),
        floor_t: t_of(&report.floor, digits),
        slope_function_floor_t2: Rat(slope_function_floor),
        higher_rank_floor_t2: Rat(higher_rank_floor),
        rank_thresholds: thresholds
            .iter()
            .map(|&(rank, t2)| ThresholdJson { rank, t2: Rat(t2) })
            .collect(),
        walls: report
            .walls
            .iter()
            .map(|w| WallJson::new(w, digits))
            .collect(),
        boundary_walls: report
            .boundary_walls
            .iter()
            .map(|w| WallJson::new(w, digits))
            .collect(),
        chambers: report
            .chambers
            .iter()
            .map(|c| ChamberJson {
                lower: Rat(c.lower),
                upper: c.upper.map(Rat),
                sample_t2: Rat(c.sample_t_squared),
            })
            .collect(),
        pair: pair.map(|(v, w, wall)| PairJson::new(&v, &w, &wall)),
    })
}

pub fn flops_doc(
    surf: &SurfaceData,
    kind: ChargeKind,
    floor: Q,
    records: &[FlopRecord],
    count: &FlopCount,
    stable_pairs: Option<(i64, i64)>,
    digits: usize,
) -> Document {
    Document::Flops(FlopsDoc {
        surface: SurfaceJson::new(surf),
        charge: kind.as_str().to_string(),
        floor_t2: Rat(floor),
        flops: records.iter().map(|r| FlopJson::new(r, digits)).collect(),
        count: CountJson {
            enumerated: count.enumerated,
            closed_form: count.closed_form,
            agrees: count.agrees(),
        },
        stable_pairs: stable_pairs.map(|(projective_dim, chain_length)| StablePairsJson {
            projective_dim,
            chain_length,
        }),
    })
}

/// `lengths` holds `(d, rank-one wall t²)`; `examples` holds `(deg, threshold)`.
pub fn vanishing_doc(
    surf: &SurfaceData,
    kind: ChargeKind,
    max_length: i64,
    very_ample: bool,
    lengths: &[(i64, Q)],
    examples: &[(i64, Q)],
) -> Document {
    Document::Vanishing(VanishingDoc {
        surface: SurfaceJson::new(surf),
        charge: kind.as_str().to_string(),
        max_length,
        very_ample,
        lengths: lengths
            .iter()
            .map(|&(d, t2)| LengthJson {
                d,
                wall_t2: Rat(t2),
                vanishes: d <= max_length,
            })
            .collect(),
        example_thresholds: examples
            .iter()
            .map(|&(deg, t2)| ExampleJson { deg, t2: Rat(t2) })
            .collect(),
    })
}

pub fn destabilizers_doc(
    surf: &SurfaceData,
    kind: ChargeKind,
    t2: Q,
    target: &CharVector,
    rank_cap: i64,
    candidates: &[CharVector],
    digits: usize,
) -> Document {
    Document::Destabilizers(DestabilizersDoc {
        surface: SurfaceJson::new(surf),
        charge: kind.as_str().to_string(),
        t2: Rat(t2),
        t: t_of(&t2, digits),
        target: vec3(target),
        rank_cap,
        candidates: candidates
            .iter()
            .map(|k| CandidateJson {
                class: vec3(k),
                rank: k.r,
                d: (k.r == 1).then(|| surf.half_h_squared() - k.s),
            })
            .collect(),
    })
}

/// `dims` holds the moduli dimensions of `v` and `w`.
pub fn chi_doc(
    surf: &SurfaceData,
    kind: ChargeKind,
    v: &CharVector,
    w: &CharVector,
    chi: i64,
    dims: (i64, i64),
) -> Document {
    Document::Chi(ChiDoc {
        surface: SurfaceJson::new(surf),
        charge: kind.as_str().to_string(),
        v: vec3(v),
        w: vec3(w),
        chi,
        moduli_dimension_v: dims.0,
        moduli_dimension_w: dims.1,
    })
}

pub fn bounds_doc(
    surf: &SurfaceData,
    kind: ChargeKind,
    (rank, c1): (i64, i64),
    bg: Q,
    sharp: i64,
    ceiling: Q,
) -> Document {
    Document::Bounds(BoundsDoc {
        surface: SurfaceJson::new(surf),
        charge: kind.as_str().to_string(),
        rank,
        c1,
        bg_bound: Rat(bg),
        sharp_bound: sharp,
        ch2_ceiling: Rat(ceiling),
    })
}

pub fn oracle_doc(report: &ChamberReport, rank_cap: i64, margin: i64, oracle: &[Q]) -> Document {
    let chamber: Vec<Q> = report.walls.iter().map(|w| w.t_squared).collect();
    let missing: Vec<Rat> = chamber
        .iter()
        .filter(|t| !oracle.contains(t))
        .map(|&t| Rat(t))
        .collect();
    let extra: Vec<Rat> = oracle
        .iter()
        .filter(|t| !chamber.contains(t))
        .map(|&t| Rat(t))
        .collect();
    Document::Oracle(OracleDoc {
        surface: SurfaceJson::new(&report.surface),
        charge: report.kind.as_str().to_string(),
        rank_cap,
        margin,
        floor_t2: Rat(report.floor),
        oracle_t2: oracle.iter().map(|&t| Rat(t)).collect(),
        chamber_t2: chamber.into_iter().map(Rat).collect(),
        agrees: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    })
}
