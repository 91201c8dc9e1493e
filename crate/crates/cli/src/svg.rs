//! Number-line diagram of the chamber structure in `t²`.
//!
//! The axis covers `(0, 1/2]`, extended in quarter steps when a wall sits at
//! or above `1/2`. Coordinates are printed with two decimals so output is
//! byte-identical for identical reports.

use std::fmt::Write;
use std::path::Path;

use kwall_core::rational::{format_ratio, to_f64};
use kwall_core::{ChamberReport, WallLabel, Q};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 160.0;
const LEFT: f64 = 40.0;
const RIGHT: f64 = 760.0;
const AXIS_Y: f64 = 110.0;

pub fn axis_extent(report: &ChamberReport) -> Q {
    let top = report
        .walls
        .iter()
        .chain(&report.boundary_walls)
        .map(|w| w.t_squared)
        .fold(report.floor, Q::max);
    let quarters = (top * Q::from_integer(4)).floor() + Q::from_integer(1);
    Q::new(1, 2).max(quarters / Q::from_integer(4))
}

pub fn render_svg(report: &ChamberReport) -> String {
    let extent = axis_extent(report);
    let x = |t2: Q| LEFT + (RIGHT - LEFT) * to_f64(&(t2 / extent));
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{HEIGHT:.0}" viewBox="0 0 {WIDTH:.0} {HEIGHT:.0}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{WIDTH:.0}" height="{HEIGHT:.0}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{LEFT:.2}" y="16.00" font-family="monospace" font-size="11">{} {} charge, floor t² = {}</text>"#,
        report.surface,
        report.kind,
        format_ratio(&report.floor)
    );
    let _ = writeln!(
        s,
        r##"<rect class="floor" x="{LEFT:.2}" y="{:.2}" width="{:.2}" height="40.00" fill="#cccccc"/>"##,
        AXIS_Y - 20.0,
        x(report.floor) - LEFT
    );
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{LEFT:.2}" y1="{AXIS_Y:.2}" x2="{RIGHT:.2}" y2="{AXIS_Y:.2}" stroke="black"/>"#
    );
    for (t2, anchor) in [(Q::from_integer(0), "start"), (extent, "end")] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="10" text-anchor="{anchor}">{}</text>"#,
            x(t2),
            AXIS_Y + 30.0,
            format_ratio(&t2)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="10">t²</text>"#,
        RIGHT + 8.0,
        AXIS_Y + 4.0
    );
    for (i, w) in report
        .walls
        .iter()
        .chain(&report.boundary_walls)
        .enumerate()
    {
        let label = match &w.label {
            WallLabel::RankOne { d } => format!("d={d} ({})", format_ratio(&w.t_squared)),
            WallLabel::HigherRank { rank } => format!("r={rank} ({})", format_ratio(&w.t_squared)),
            WallLabel::Pairwise { .. } => format_ratio(&w.t_squared),
        };
        let xw = x(w.t_squared);
        let _ = writeln!(
            s,
            r#"<line class="wall" x1="{xw:.2}" y1="{:.2}" x2="{xw:.2}" y2="{:.2}" stroke="black"/>"#,
            AXIS_Y - 15.0,
            AXIS_Y + 15.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{xw:.2}" y="{:.2}" font-family="monospace" font-size="10" text-anchor="middle">{label}</text>"#,
            AXIS_Y - 22.0 - 13.0 * (i % 4) as f64
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn write_svg(report: &ChamberReport, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use kwall_core::walls::chamber_decomposition;
    use kwall_core::{ChargeKind, SurfaceData};

    #[test]
    fn genus_seven_ticks() {
        let r = chamber_decomposition(&SurfaceData::k3(7).unwrap(), ChargeKind::Twisted);
        let svg = render_svg(&r);
        assert_eq!(svg.matches(r#"class="wall""#).count(), 3);
        assert_eq!(svg.matches(r#"class="floor""#).count(), 1);
        assert!(svg.contains(">d=1 (1/4)<"));
        assert!(svg.contains(r#"viewBox="0 0 800 160""#));
        assert_eq!(svg, render_svg(&r));
    }

    #[test]
    fn empty_wall_list() {
        let mut r = chamber_decomposition(&SurfaceData::k3(7).unwrap(), ChargeKind::Twisted);
        r.walls.clear();
        let svg = render_svg(&r);
        assert_eq!(svg.matches(r#"class="wall""#).count(), 0);
        assert_eq!(svg.matches(r#"class="axis""#).count(), 1);
        assert_eq!(svg.matches(r#"class="floor""#).count(), 1);
    }

    #[test]
    fn axis_grows_past_high_walls() {
        let r = chamber_decomposition(&SurfaceData::k3(2).unwrap(), ChargeKind::Twisted);
        assert_eq!(axis_extent(&r), Q::new(3, 2));
        let r = chamber_decomposition(&SurfaceData::k3(7).unwrap(), ChargeKind::Twisted);
        assert_eq!(axis_extent(&r), Q::new(1, 2));
    }
}
