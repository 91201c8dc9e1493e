//! Command-line frontend for `kwall-core`.
//!
//! [`build`] turns a parsed [`Query`] into a [`Document`] by calling the
//! engine; [`run`] renders it as a table or JSON and writes the optional SVG.
//! Exit codes: 0 success, 1 domain error, 2 usage or parse error.

pub mod config;
pub mod query;
pub mod report;
pub mod svg;
pub mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use kwall_core::charge::{ch2_ceiling, slope_function_floor};
use kwall_core::geography::{
    example_threshold, flop_count, flop_sequence, stable_pairs_ambient, vanishing_max_length,
    very_ample,
};
use kwall_core::lattice::{bg_bound, euler_pairing, moduli_dimension, sharp_bound};
use kwall_core::walls::{
    chamber_decomposition, chamber_floor, destabilizer_candidates, higher_rank_floor, oracle_walls,
    pair_wall, rank_one_wall_value, rank_threshold,
};
use kwall_core::{CharVector, ChargeKind, ChargeParams, SurfaceData, SurfaceKind};

pub use query::{Command, Query};
pub use report::Document;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] kwall_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io { .. } => 1,
        }
    }
}

fn usage<T>(msg: &str) -> Result<T, CliError> {
    Err(CliError::Usage(msg.to_string()))
}

pub fn surface(q: &Query) -> Result<SurfaceData, CliError> {
    let kind = match (q.kind, q.genus, q.polarization) {
        (Some(k), _, _) => k.into(),
        (None, Some(_), None) => SurfaceKind::K3,
        (None, None, Some(_)) => SurfaceKind::Abelian,
        (None, Some(_), Some(_)) => {
            return usage("give either --genus (K3) or --polarization (abelian), not both")
        }
        (None, None, None) => {
            return usage("a surface needs --genus N (K3) or --polarization N (abelian)")
        }
    };
    let parameter = match kind {
        SurfaceKind::K3 if q.polarization.is_some() => {
            return usage("--polarization applies to abelian surfaces")
        }
        SurfaceKind::Abelian if q.genus.is_some() => {
            return usage("--genus applies to K3 surfaces")
        }
        SurfaceKind::K3 => q
            .genus
            .map_or_else(|| usage("--kind k3 needs --genus"), Ok)?,
        SurfaceKind::Abelian => q
            .polarization
            .map_or_else(|| usage("--kind abelian needs --polarization"), Ok)?,
    };
    Ok(SurfaceData::new(kind, parameter)?)
}

pub fn charge_kind(q: &Query, surf: &SurfaceData) -> ChargeKind {
    q.charge
        .map_or_else(|| ChargeKind::default_for(surf), Into::into)
}

fn need_v(q: &Query) -> Result<CharVector, CliError> {
    q.v.map_or_else(|| usage("this command needs --v r,c,s"), Ok)
}

pub fn build(q: &Query) -> Result<Document, CliError> {
    let surf = surface(q)?;
    let kind = charge_kind(q, &surf);
    let doc = match q.command {
        Command::SurfaceInfo => {
            let curve = CharVector::curve_class(&surf);
            report::surface_info_doc(
                &surf,
                kind,
                &report::SurfaceInfoInputs {
                    default_charge: ChargeKind::default_for(&surf),
                    curve_class: curve,
                    moduli_dimension: moduli_dimension(&curve, &surf),
                    slope_function_floor: slope_function_floor(&surf, kind),
                    higher_rank_floor: higher_rank_floor(&surf, kind),
                    floor: chamber_floor(&surf, kind),
                    vanishing_max_length: vanishing_max_length(&surf, kind),
                    very_ample: very_ample(&surf, kind),
                    flop_count: flop_count(&surf, kind)?.enumerated,
                },
            )
        }
        Command::Walls => {
            let pair = match (q.v, q.w) {
                (Some(v), Some(w)) => Some((v, w, pair_wall(&v, &w, &surf, kind)?)),
                (None, None) => None,
                _ => return usage("a pairwise wall needs both --v and --w"),
            };
            let thresholds = (1..=3)
                .map(|n| Ok((2 * n + 1, rank_threshold(n, &surf, kind)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            report::walls_doc(
                &chamber_decomposition(&surf, kind),
                slope_function_floor(&surf, kind),
                higher_rank_floor(&surf, kind),
                &thresholds,
                pair,
                q.digits,
            )
        }
        Command::Flops => report::flops_doc(
            &surf,
            kind,
            chamber_floor(&surf, kind),
            &flop_sequence(&surf, kind)?,
            &flop_count(&surf, kind)?,
            surf.is_k3()
                .then(|| stable_pairs_ambient(&surf))
                .transpose()?,
            q.digits,
        ),
        Command::Vanishing => {
            let max = vanishing_max_length(&surf, kind);
            let lengths: Vec<_> = (0..=max + 1)
                .map(|d| (d, rank_one_wall_value(d, &surf, kind)))
                .collect();
            let examples: Vec<_> = (0..=max + 1)
                .map(|d| (d, example_threshold(d, &surf)))
                .collect();
            report::vanishing_doc(
                &surf,
                kind,
                max,
                very_ample(&surf, kind),
                &lengths,
                &examples,
            )
        }
        Command::Destabilizers => {
            let t2 =
                q.t2.map_or_else(|| usage("destabilizers needs --t2 p/q"), Ok)?;
            let p = ChargeParams::new(t2, kind)?;
            let target = q.v.unwrap_or_else(|| CharVector::curve_class(&surf));
            let found = destabilizer_candidates(&target, &p, &surf, q.rank_cap)?;
            report::destabilizers_doc(&surf, kind, t2, &target, q.rank_cap, &found, q.digits)
        }
        Command::Chi => {
            let v = need_v(q)?;
            let w = q.w.unwrap_or(v);
            let dims = (moduli_dimension(&v, &surf), moduli_dimension(&w, &surf));
            report::chi_doc(&surf, kind, &v, &w, euler_pairing(&v, &w, &surf), dims)
        }
        Command::Bounds => {
            let v = need_v(q)?;
            report::bounds_doc(
                &surf,
                kind,
                (v.r, v.c),
                bg_bound(v.r, v.c, &surf)?,
                sharp_bound(v.r, v.c, &surf)?,
                ch2_ceiling(v.r, v.c, &surf, kind)?,
            )
        }
        Command::Oracle => {
            if q.margin < 0 {
                return usage("--margin must be non-negative");
            }
            let target = q.v.unwrap_or_else(|| CharVector::curve_class(&surf));
            let walls = oracle_walls(&target, &surf, kind, q.rank_cap, q.margin)?;
            report::oracle_doc(
                &chamber_decomposition(&surf, kind),
                q.rank_cap,
                q.margin,
                &walls,
            )
        }
    };
    Ok(doc)
}

/// Renders the document for `q` to `out`; diagnostics go to `err`.
pub fn run(q: &Query, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match try_run(q, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn try_run(q: &Query, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = build(q)?;
    if let Some(path) = &q.svg {
        let surf = surface(q)?;
        let report = chamber_decomposition(&surf, charge_kind(q, &surf));
        svg::write_svg(&report, path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    let text = if q.json {
        report::to_json(&doc)
    } else {
        table::render(&doc)
    };
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".to_string(),
            source,
        })
}

/// Full entry point: config expansion, flag parsing, dispatch.
pub fn main_with_args(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match config::expand_args(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match Query::try_parse_from(args) {
        Ok(q) => run(&q, out, err),
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            e.exit_code()
        }
    }
}
