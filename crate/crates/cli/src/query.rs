use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use kwall_core::rational::parse_ratio;
use kwall_core::{CharVector, ChargeKind, SurfaceKind, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    SurfaceInfo,
    Walls,
    Flops,
    Vanishing,
    Destabilizers,
    Chi,
    Bounds,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    K3,
    Abelian,
}

impl From<KindArg> for SurfaceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::K3 => SurfaceKind::K3,
            KindArg::Abelian => SurfaceKind::Abelian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChargeArg {
    Naive,
    Twisted,
}

impl From<ChargeArg> for ChargeKind {
    fn from(c: ChargeArg) -> Self {
        match c {
            ChargeArg::Naive => ChargeKind::Naive,
            ChargeArg::Twisted => ChargeKind::Twisted,
        }
    }
}

/// Wall-and-chamber calculator for Picard-rank-one K3 and abelian surfaces.
///
/// All values of t² are exact rationals printed as p/q; t itself only
/// appears as a decimal annotation.
#[derive(Debug, Clone, Parser)]
#[command(name = "kwall", version, args_override_self = true)]
pub struct Query {
    #[arg(value_enum)]
    pub command: Command,

    /// Surface type; inferred from --genus / --polarization when omitted.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,

    /// Genus g of a K3 surface (H² = 2g − 2).
    #[arg(long)]
    pub genus: Option<i64>,

    /// Polarization type D of an abelian surface (H² = 2D).
    #[arg(long)]
    pub polarization: Option<i64>,

    /// Central charge [default: twisted on K3, naive on abelian].
    #[arg(long, value_enum)]
    pub charge: Option<ChargeArg>,

    /// Stability parameter t² as p/q.
    #[arg(long, value_parser = parse_t2, allow_hyphen_values = true)]
    pub t2: Option<Q>,

    /// Chern vector r,c,s meaning ch = (r, cH, s·pt).
    #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
    pub v: Option<CharVector>,

    /// Second Chern vector for pairings and walls.
    #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
    pub w: Option<CharVector>,

    #[arg(long, default_value_t = 9, allow_hyphen_values = true)]
    pub rank_cap: i64,

    #[arg(long, default_value_t = 3)]
    pub margin: i64,

    #[arg(long)]
    pub json: bool,

    /// Also write the t² number line with walls and the floor band.
    #[arg(long)]
    pub svg: Option<PathBuf>,

    /// Decimal digits for t annotations.
    #[arg(long, default_value_t = 6)]
    pub digits: usize,

    /// Flat `flag = value` file; command-line flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

pub fn parse_t2(text: &str) -> Result<Q, String> {
    parse_ratio(text).map_err(|e| e.to_string())
}

pub fn parse_vector(text: &str) -> Result<CharVector, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [r, c, s] = parts.as_slice() else {
        return Err(format!("expected r,c,s, got {text:?}"));
    };
    let num = |x: &str| {
        x.parse::<i64>()
            .map_err(|_| format!("malformed integer {x:?} in {text:?}"))
    };
    Ok(CharVector {
        r: num(r)?,
        c: num(c)?,
        s: num(s)?,
    })
}
