//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::ffi::OsString;
use std::process::{Command as Proc, ExitCode};
use std::time::Instant;

use kwall::report::{self, from_json, to_json, Document};
use kwall::{svg, table};
use kwall_core::charge::{central_charge, ch2_ceiling, slope_compare, slope_function_floor};
use kwall_core::geography::{
    example_threshold, flop_count, flop_sequence, pd_geometry, stable_pairs_ambient,
    vanishing_max_length, very_ample,
};
use kwall_core::lattice::{bg_bound, euler_pairing, moduli_dimension, sharp_bound};
use kwall_core::walls::{
    chamber_decomposition, chamber_floor, destabilizer_candidates, higher_rank_floor, oracle_walls,
    pair_wall, rank_one_wall_value, rank_one_walls, rank_threshold,
};
use kwall_core::{CharVector, ChargeKind, ChargeParams, SurfaceData, WallLabel, Q};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn k3(g: i64) -> SurfaceData {
    SurfaceData::k3(g).unwrap()
}

fn ab(d: i64) -> SurfaceData {
    SurfaceData::abelian(d).unwrap()
}

fn sweep(k3_max: i64, ab_max: i64) -> Vec<SurfaceData> {
    (2..=k3_max).map(k3).chain((1..=ab_max).map(ab)).collect()
}

const KINDS: [ChargeKind; 2] = [ChargeKind::Naive, ChargeKind::Twisted];

fn genus_three_walls() -> Check {
    let s = k3(3);
    let walls = rank_one_walls(&s, ChargeKind::Twisted);
    let d1 = walls
        .iter()
        .find(|w| w.label == WallLabel::RankOne { d: 1 })
        .ok_or("no d=1 wall")?;
    ensure(d1.t_squared == Q::new(1, 4), || {
        format!("d=1 at {}", d1.t_squared)
    })?;
    let t3 = rank_threshold(1, &s, ChargeKind::Twisted).map_err(|e| e.to_string())?;
    ensure(t3 == Q::new(1, 12), || format!("rank-3 wall at {t3}"))?;
    let floor = chamber_decomposition(&s, ChargeKind::Twisted).floor;
    ensure(floor == Q::new(1, 12), || format!("floor {floor}"))
}

fn flop_counts() -> Check {
    let cases = [
        (k3(3), ChargeKind::Twisted, 2),
        (k3(7), ChargeKind::Twisted, 3),
        (k3(7), ChargeKind::Naive, 2),
        (ab(4), ChargeKind::Naive, 1),
        (ab(5), ChargeKind::Naive, 2),
    ];
    for (s, kind, want) in cases {
        let c = flop_count(&s, kind).map_err(|e| e.to_string())?;
        ensure(c.enumerated == want && c.closed_form == Some(want), || {
            format!("{s} {kind}: {c:?}, want {want}")
        })?;
    }
    Ok(())
}

fn vanishing_thresholds() -> Check {
    let tw = ChargeKind::Twisted;
    ensure(vanishing_max_length(&k3(2), tw) == 0, || {
        "g=2 twisted".into()
    })?;
    ensure(vanishing_max_length(&k3(3), tw) == 1, || {
        "g=3 twisted".into()
    })?;
    ensure(!very_ample(&k3(2), tw) && very_ample(&k3(3), tw), || {
        "twisted flip".into()
    })?;
    let first = |f: &dyn Fn(i64) -> bool, range: std::ops::RangeInclusive<i64>| {
        range.into_iter().find(|&n| f(n))
    };
    let naive = first(&|g| very_ample(&k3(g), ChargeKind::Naive), 2..=60);
    ensure(naive == Some(6), || {
        format!("naive K3 first very ample at {naive:?}")
    })?;
    ensure(
        (6..=60).all(|g| very_ample(&k3(g), ChargeKind::Naive)),
        || "naive K3 not monotone".into(),
    )?;
    let abel = first(&|d| very_ample(&ab(d), ChargeKind::Naive), 1..=60);
    ensure(abel == Some(5), || {
        format!("abelian first very ample at {abel:?}")
    })?;
    ensure(
        (5..=60).all(|d| very_ample(&ab(d), ChargeKind::Naive)),
        || "abelian not monotone".into(),
    )
}

fn dimension_audit() -> Check {
    for s in sweep(50, 25) {
        for kind in KINDS {
            for r in flop_sequence(&s, kind).map_err(|e| e.to_string())? {
                ensure(r.codim == r.fiber_dim, || {
                    format!("{s} {kind} d={}: {r:?}", r.d)
                })?;
            }
        }
    }
    let g3 = pd_geometry(1, &k3(3)).map_err(|e| e.to_string())?;
    ensure(g3.codim == 1 && g3.divisorial && !g3.mukai_flop, || {
        format!("g=3 d=1: {g3:?}")
    })?;
    let d5 = pd_geometry(1, &ab(5)).map_err(|e| e.to_string())?;
    ensure(d5.codim == 2 && d5.mukai_flop, || {
        format!("D=5 d=1: {d5:?}")
    })
}

fn oracle_equivalence() -> Check {
    for s in sweep(30, 15) {
        for kind in KINDS {
            let oracle = oracle_walls(&CharVector::curve_class(&s), &s, kind, 3, 3)
                .map_err(|e| e.to_string())?;
            let chambers: Vec<Q> = chamber_decomposition(&s, kind)
                .walls
                .iter()
                .map(|w| w.t_squared)
                .collect();
            ensure(oracle == chambers, || {
                format!("{s} {kind}: oracle {oracle:?} vs {chambers:?}")
            })?;
        }
    }
    Ok(())
}

fn moduli_dimensions() -> Check {
    for s in sweep(30, 15) {
        let v = CharVector::curve_class(&s);
        let dim = moduli_dimension(&v, &s);
        ensure(
            dim == 2 + s.h_squared() && dim == 2 - euler_pairing(&v, &v, &s),
            || format!("{s}: dim {dim}"),
        )?;
    }
    for g in 2..=30 {
        for d in 0..=10 {
            let dim = moduli_dimension(&CharVector::ideal(d), &k3(g));
            ensure(dim == 2 * d, || format!("Hilb^{d} on g={g}: {dim}"))?;
        }
    }
    Ok(())
}

/// A random class in the heart: `Im ≥ 0` after shifting, and `Re < 0` when `Im = 0`.
fn heart_class(rng: &mut StdRng, surf: &SurfaceData, p: &ChargeParams) -> CharVector {
    loop {
        let v = CharVector {
            r: rng.gen_range(-7..=7),
            c: rng.gen_range(-7..=7),
            s: rng.gen_range(-60..=60),
        };
        if v.is_zero() {
            continue;
        }
        let v = if 2 * v.c - v.r < 0 { -v } else { v };
        if central_charge(&v, p, surf).in_half_plane() {
            return v;
        }
    }
}

fn property_suites() -> Check {
    let mut rng = StdRng::seed_from_u64(0x006b_7761_6c6c);
    let surfaces = sweep(30, 15);
    for i in 0..10_000 {
        let s = &surfaces[rng.gen_range(0..surfaces.len())];
        let kind = KINDS[i % 2];
        let t2 = Q::new(rng.gen_range(1..=400), rng.gen_range(1..=200));
        let p = ChargeParams::new(t2, kind).map_err(|e| e.to_string())?;
        let v = heart_class(&mut rng, s, &p);
        let w = heart_class(&mut rng, s, &p);
        let vw = slope_compare(&v, &w, &p, s).map_err(|e| e.to_string())?;
        let wv = slope_compare(&w, &v, &p, s).map_err(|e| e.to_string())?;
        ensure(vw == wv.reverse(), || {
            format!("antisymmetry {s} {kind} t²={t2} {v} {w}")
        })?;
        let (k, m) = (rng.gen_range(1..=9), rng.gen_range(1..=9));
        let scaled = slope_compare(&v.scale(k), &w.scale(m), &p, s).map_err(|e| e.to_string())?;
        ensure(scaled == vw, || {
            format!("scaling {s} {kind} t²={t2} {v}·{k} {w}·{m}")
        })?;
    }

    for s in sweep(30, 15) {
        for _ in 0..50 {
            let v = CharVector {
                r: rng.gen_range(-20..=20),
                c: rng.gen_range(-20..=20),
                s: rng.gen_range(-200..=200),
            };
            let t2 = Q::new(rng.gen_range(1..=400), rng.gen_range(1..=200));
            let z = central_charge(&v, &ChargeParams::new(t2, ChargeKind::Naive).unwrap(), &s);
            let zp = central_charge(&v, &ChargeParams::new(t2, ChargeKind::Twisted).unwrap(), &s);
            ensure(zp.im_over_t == z.im_over_t, || {
                format!("{s} {v}: Im differs")
            })?;
            if s.is_k3() {
                ensure(zp.re - z.re == Q::from_integer(-v.r), || {
                    format!("{s} {v}: Z' − Z ≠ −r")
                })?;
            } else {
                ensure(zp == z, || format!("{s} {v}: Z' ≠ Z on abelian"))?;
            }
        }
    }

    for s in sweep(30, 15) {
        for kind in KINDS {
            let walls = rank_one_walls(&s, kind);
            let step = match (kind, s.genus()) {
                (ChargeKind::Twisted, Some(g)) => Q::new(1, g - 1),
                _ => Q::new(2, s.h_squared()),
            };
            ensure(
                walls
                    .windows(2)
                    .all(|w| w[0].t_squared - w[1].t_squared == step),
                || format!("{s} {kind}: step is not {step}"),
            )?;
        }
    }
    Ok(())
}

fn sharp_bounds() -> Check {
    for g in [3, 7, 12] {
        let s = k3(g);
        let sharp = sharp_bound(3, 2, &s).map_err(|e| e.to_string())?;
        let closed = (Q::new(4 * g, 3) - Q::from_integer(4)).floor().to_integer();
        ensure(sharp == closed, || {
            format!("g={g}: sharp {sharp} vs ⌊4g/3 − 4⌋ = {closed}")
        })?;
        let ceiling = ch2_ceiling(3, 2, &s, ChargeKind::Twisted).map_err(|e| e.to_string())?;
        ensure(ceiling == Q::from_integer(sharp), || {
            format!("g={g}: ceiling {ceiling}")
        })?;
    }
    for g in (3..=51).step_by(2) {
        let s = k3(g);
        for c in 1..=5 {
            let sharp = sharp_bound(2 * c, c, &s).map_err(|e| e.to_string())?;
            let bg = bg_bound(2 * c, c, &s).map_err(|e| e.to_string())?;
            let dropped = bg - Q::from_integer(2 * c);
            ensure(Q::from_integer(sharp) == dropped, || {
                format!("g={g} c={c}: sharp {sharp} vs bg − 2c = {dropped}")
            })?;
        }
    }
    Ok(())
}

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// The documents the CLI should print, built straight from the engine.
fn expected_documents(s: &SurfaceData, surface_flag: &[&str]) -> Vec<(Vec<String>, Document)> {
    let kind = ChargeKind::default_for(s);
    let curve = CharVector::curve_class(s);
    let mut out = Vec::new();
    let with = |extra: &[&str], cmd: &str| {
        let mut a = args(&[cmd]);
        a.extend(args(surface_flag));
        a.extend(args(extra));
        a
    };

    out.push((
        with(&[], "surface-info"),
        report::surface_info_doc(
            s,
            kind,
            &report::SurfaceInfoInputs {
                default_charge: kind,
                curve_class: curve,
                moduli_dimension: moduli_dimension(&curve, s),
                slope_function_floor: slope_function_floor(s, kind),
                higher_rank_floor: higher_rank_floor(s, kind),
                floor: chamber_floor(s, kind),
                vanishing_max_length: vanishing_max_length(s, kind),
                very_ample: very_ample(s, kind),
                flop_count: flop_count(s, kind).unwrap().enumerated,
            },
        ),
    ));

    let thresholds: Vec<(i64, Q)> = (1..=3)
        .map(|n| (2 * n + 1, rank_threshold(n, s, kind).unwrap()))
        .collect();
    let walls = |pair| {
        report::walls_doc(
            &chamber_decomposition(s, kind),
            slope_function_floor(s, kind),
            higher_rank_floor(s, kind),
            &thresholds,
            pair,
            6,
        )
    };
    out.push((with(&[], "walls"), walls(None)));
    let dual = CharVector::shifted_dual_ideal(1);
    out.push((
        with(&["--v", &curve.to_csv(), "--w", "-1,0,1"], "walls"),
        walls(Some((
            curve,
            dual,
            pair_wall(&curve, &dual, s, kind).unwrap(),
        ))),
    ));

    out.push((
        with(&[], "flops"),
        report::flops_doc(
            s,
            kind,
            chamber_floor(s, kind),
            &flop_sequence(s, kind).unwrap(),
            &flop_count(s, kind).unwrap(),
            s.is_k3().then(|| stable_pairs_ambient(s).unwrap()),
            6,
        ),
    ));

    let max = vanishing_max_length(s, kind);
    let lengths: Vec<_> = (0..=max + 1)
        .map(|d| (d, rank_one_wall_value(d, s, kind)))
        .collect();
    let examples: Vec<_> = (0..=max + 1)
        .map(|d| (d, example_threshold(d, s)))
        .collect();
    out.push((
        with(&[], "vanishing"),
        report::vanishing_doc(s, kind, max, very_ample(s, kind), &lengths, &examples),
    ));

    let t2 = Q::new(1, 10);
    let p = ChargeParams::new(t2, kind).unwrap();
    out.push((
        with(&["--t2", "1/10"], "destabilizers"),
        report::destabilizers_doc(
            s,
            kind,
            t2,
            &curve,
            9,
            &destabilizer_candidates(&curve, &p, s, 9).unwrap(),
            6,
        ),
    ));

    let w = CharVector::twisted_ideal(s, 1);
    out.push((
        with(&["--v", &curve.to_csv(), "--w", &w.to_csv()], "chi"),
        report::chi_doc(
            s,
            kind,
            &curve,
            &w,
            euler_pairing(&curve, &w, s),
            (moduli_dimension(&curve, s), moduli_dimension(&w, s)),
        ),
    ));

    out.push((
        with(&["--v", "3,2,0"], "bounds"),
        report::bounds_doc(
            s,
            kind,
            (3, 2),
            bg_bound(3, 2, s).unwrap(),
            sharp_bound(3, 2, s).unwrap(),
            ch2_ceiling(3, 2, s, kind).unwrap(),
        ),
    ));

    out.push((
        with(&[], "oracle"),
        report::oracle_doc(
            &chamber_decomposition(s, kind),
            9,
            3,
            &oracle_walls(&curve, s, kind, 9, 3).unwrap(),
        ),
    ));
    out
}

trait Csv {
    fn to_csv(&self) -> String;
}

impl Csv for CharVector {
    fn to_csv(&self) -> String {
        format!("{},{},{}", self.r, self.c, self.s)
    }
}

fn kwall(a: &[String]) -> Result<String, String> {
    let out = Proc::new(env!("CARGO_BIN_EXE_kwall"))
        .args(a)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!(
            "kwall {a:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn cli_contract() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (s, flag) in [(k3(7), ["--genus", "7"]), (ab(5), ["--polarization", "5"])] {
        for (a, doc) in expected_documents(&s, &flag) {
            let json = to_json(&doc);
            let reparsed = from_json(&json).map_err(|e| format!("{a:?}: {e}"))?;
            ensure(reparsed == doc && to_json(&reparsed) == json, || {
                format!("{a:?}: round trip")
            })?;

            let mut ja = a.clone();
            ja.push("--json".into());
            let cli_json = kwall(&ja)?;
            ensure(cli_json == json, || {
                format!("{a:?}: CLI JSON differs\n{cli_json}\nvs\n{json}")
            })?;
            let cli_table = kwall(&a)?;
            ensure(cli_table == table::render(&doc), || {
                format!("{a:?}: CLI table differs")
            })?;
        }

        let report = chamber_decomposition(&s, ChargeKind::default_for(&s));
        ensure(
            svg::render_svg(&report) == svg::render_svg(&report.clone()),
            || "svg render".into(),
        )?;
        let paths = [dir.path().join("a.svg"), dir.path().join("b.svg")];
        for p in &paths {
            let mut a = args(&["walls"]);
            a.extend(args(&flag));
            a.push("--svg".into());
            a.push(p.display().to_string());
            kwall(&a)?;
        }
        let bytes: Vec<Vec<u8>> = paths
            .iter()
            .map(std::fs::read)
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(bytes[0] == bytes[1], || {
            format!("{s}: SVG bytes differ between runs")
        })?;
        ensure(bytes[0] == svg::render_svg(&report).into_bytes(), || {
            format!("{s}: CLI SVG differs from engine")
        })?;
    }

    let mut sink = Vec::new();
    let code = kwall::main_with_args(
        ["kwall", "walls", "--genus", "3", "--json"]
            .map(OsString::from)
            .to_vec(),
        &mut sink,
        &mut Vec::new(),
    );
    ensure(code == 0, || format!("in-process exit {code}"))?;
    let doc = from_json(&String::from_utf8(sink).unwrap()).map_err(|e| e.to_string())?;
    let Document::Walls(w) = doc else {
        return Err("not a walls document".into());
    };
    let got: Vec<(Option<i64>, String)> = w.walls.iter().map(|x| (x.d, x.t2.to_string())).collect();
    ensure(
        got == [(Some(0), "3/4".into()), (Some(1), "1/4".into())]
            && w.floor_t2.to_string() == "1/12",
        || format!("genus-3 walls {got:?} floor {}", w.floor_t2),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "genus-3 twisted walls: d=1 at 1/4, rank-3 floor 1/12",
            genus_three_walls,
        ),
        (
            "flop counts match enumeration and closed forms",
            flop_counts,
        ),
        (
            "vanishing thresholds and very-ampleness onsets",
            vanishing_thresholds,
        ),
        ("flop loci have codim = fiber dimension", dimension_audit),
        (
            "oracle walls equal chamber walls (rank cap 3, margin 3)",
            oracle_equivalence,
        ),
        (
            "moduli dimensions of curve classes and Hilbert schemes",
            moduli_dimensions,
        ),
        (
            "slope comparison, charge twist and wall step properties",
            property_suites,
        ),
        ("sharp ch2 bound spot checks", sharp_bounds),
        (
            "CLI matches engine, JSON round-trips, SVG is deterministic",
            cli_contract,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS  {}. {name} ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  {}. {name} ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
