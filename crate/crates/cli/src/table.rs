//! Plain-text rendering of documents.

use std::fmt::Write;

use crate::report::{Document, Rat, Vec3};

fn vector(v: &Vec3) -> String {
    format!("({},{},{})", v[0], v[1], v[2])
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
pub fn grid(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut text = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            text.push_str(cell);
            text.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn pairs(out: &mut String, items: &[(&str, String)]) {
    let width = items
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    for (k, v) in items {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
    }
}

fn rats(xs: &[Rat]) -> String {
    if xs.is_empty() {
        return "-".to_string();
    }
    xs.iter().map(Rat::to_string).collect::<Vec<_>>().join(", ")
}

pub fn render(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::SurfaceInfo(d) => {
            pairs(
                &mut out,
                &[
                    ("surface", surface_line(&d.surface)),
                    (
                        "charge",
                        format!("{} (default {})", d.charge, d.default_charge),
                    ),
                    ("curve class", vector(&d.curve_class)),
                    ("moduli dimension", d.moduli_dimension.to_string()),
                    (
                        "slope-function floor t²",
                        d.slope_function_floor_t2.to_string(),
                    ),
                    ("higher-rank floor t²", d.higher_rank_floor_t2.to_string()),
                    ("chamber floor t²", d.floor_t2.to_string()),
                    ("vanishing max length", d.vanishing_max_length.to_string()),
                    ("very ample", yes(d.very_ample).to_string()),
                    ("flops", d.flop_count.to_string()),
                ],
            );
        }
        Document::Walls(d) => {
            let _ = writeln!(out, "{}, {} charge", surface_line(&d.surface), d.charge);
            let _ = writeln!(
                out,
                "floor t² = {} (t ≈ {}); slope-function {}, higher-rank {}",
                d.floor_t2, d.floor_t, d.slope_function_floor_t2, d.higher_rank_floor_t2
            );
            out.push('\n');
            let rows: Vec<Vec<String>> = d
                .walls
                .iter()
                .chain(&d.boundary_walls)
                .enumerate()
                .map(|(i, w)| {
                    vec![
                        w.label.clone(),
                        opt(&w.d),
                        w.t2.to_string(),
                        w.t.clone(),
                        if i < d.walls.len() { "" } else { "at floor" }.to_string(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["wall", "d", "t²", "t", ""], &rows));
            out.push('\n');
            let rows: Vec<Vec<String>> = d
                .chambers
                .iter()
                .rev()
                .map(|c| vec![c.lower.to_string(), opt(&c.upper), c.sample_t2.to_string()])
                .collect();
            out.push_str(&grid(&["chamber lower", "upper", "sample t²"], &rows));
            if !d.rank_thresholds.is_empty() {
                out.push('\n');
                let rows: Vec<Vec<String>> = d
                    .rank_thresholds
                    .iter()
                    .map(|t| vec![t.rank.to_string(), t.t2.to_string()])
                    .collect();
                out.push_str(&grid(&["rank", "threshold t²"], &rows));
            }
            if let Some(p) = &d.pair {
                let _ = writeln!(
                    out,
                    "\nwall {} vs {}: {} {}",
                    vector(&p.v),
                    vector(&p.w),
                    p.status,
                    opt(&p.t2)
                );
            }
        }
        Document::Flops(d) => {
            let _ = writeln!(
                out,
                "{}, {} charge, floor t² = {}",
                surface_line(&d.surface),
                d.charge,
                d.floor_t2
            );
            out.push('\n');
            let rows: Vec<Vec<String>> = d
                .flops
                .iter()
                .map(|f| {
                    vec![
                        f.d.to_string(),
                        opt(&f.t2),
                        f.ambient_dim.to_string(),
                        f.base_dim.to_string(),
                        f.fiber_dim.to_string(),
                        f.codim.to_string(),
                        if f.mukai_flop {
                            "mukai flop"
                        } else if f.divisorial {
                            "divisorial"
                        } else {
                            "-"
                        }
                        .to_string(),
                    ]
                })
                .collect();
            out.push_str(&grid(
                &["d", "t²", "ambient", "base", "fiber", "codim", "type"],
                &rows,
            ));
            let _ = writeln!(
                out,
                "\nflops: {} (closed form {})",
                d.count.enumerated,
                opt(&d.count.closed_form)
            );
            if let Some(sp) = &d.stable_pairs {
                let _ = writeln!(
                    out,
                    "stable pairs: P^{} with {} further flops",
                    sp.projective_dim, sp.chain_length
                );
            }
        }
        Document::Vanishing(d) => {
            let _ = writeln!(out, "{}, {} charge", surface_line(&d.surface), d.charge);
            let _ = writeln!(
                out,
                "vanishing for all lengths d ≤ {}; very ample: {}",
                d.max_length,
                yes(d.very_ample)
            );
            out.push('\n');
            let rows: Vec<Vec<String>> = d
                .lengths
                .iter()
                .zip(&d.example_thresholds)
                .map(|(l, e)| {
                    vec![
                        l.d.to_string(),
                        l.wall_t2.to_string(),
                        yes(l.vanishes).to_string(),
                        e.t2.to_string(),
                    ]
                })
                .collect();
            out.push_str(&grid(&["d", "wall t²", "vanishes", "1/4 − 2d/H²"], &rows));
        }
        Document::Destabilizers(d) => {
            let _ = writeln!(
                out,
                "{}, {} charge, t² = {} (t ≈ {}), target {}, rank ≤ {}",
                surface_line(&d.surface),
                d.charge,
                d.t2,
                d.t,
                vector(&d.target),
                d.rank_cap
            );
            if d.candidates.is_empty() {
                out.push_str("no destabilizing quotients\n");
            } else {
                out.push('\n');
                let rows: Vec<Vec<String>> = d
                    .candidates
                    .iter()
                    .map(|c| vec![vector(&c.class), c.rank.to_string(), opt(&c.d)])
                    .collect();
                out.push_str(&grid(&["class", "rank", "len Y"], &rows));
            }
        }
        Document::Chi(d) => {
            pairs(
                &mut out,
                &[
                    ("surface", surface_line(&d.surface)),
                    ("χ(v, w)", d.chi.to_string()),
                    (
                        "v",
                        format!("{}  dim M = {}", vector(&d.v), d.moduli_dimension_v),
                    ),
                    (
                        "w",
                        format!("{}  dim M = {}", vector(&d.w), d.moduli_dimension_w),
                    ),
                ],
            );
        }
        Document::Bounds(d) => {
            pairs(
                &mut out,
                &[
                    ("surface", surface_line(&d.surface)),
                    ("rank, c₁", format!("{}, {}H", d.rank, d.c1)),
                    ("Bogomolov-Gieseker", d.bg_bound.to_string()),
                    ("sharp", d.sharp_bound.to_string()),
                    (
                        "ceiling",
                        format!("{} ({} charge)", d.ch2_ceiling, d.charge),
                    ),
                ],
            );
        }
        Document::Oracle(d) => {
            pairs(
                &mut out,
                &[
                    (
                        "surface",
                        format!("{}, {} charge", surface_line(&d.surface), d.charge),
                    ),
                    (
                        "scan",
                        format!("rank ≤ {}, margin {}", d.rank_cap, d.margin),
                    ),
                    ("floor t²", d.floor_t2.to_string()),
                    ("oracle", rats(&d.oracle_t2)),
                    ("chambers", rats(&d.chamber_t2)),
                    ("missing", rats(&d.missing)),
                    ("extra", rats(&d.extra)),
                    ("agrees", yes(d.agrees).to_string()),
                ],
            );
        }
    }
    out
}

fn surface_line(s: &crate::report::SurfaceJson) -> String {
    match (s.genus, s.polarization) {
        (Some(g), _) => format!("K3 g={g} (H²={})", s.h_squared),
        (_, Some(d)) => format!("abelian D={d} (H²={})", s.h_squared),
        _ => format!("{} (H²={})", s.kind, s.h_squared),
    }
}
