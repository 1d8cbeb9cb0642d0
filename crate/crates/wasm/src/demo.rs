//! The demo's operations as plain Rust, so they run under `cargo test`.

use std::fmt::Write;

use hookpair::bijections::{check_theorem, Theorem};
use hookpair::diagram::{arm_slice, build_region, CellSet, Partition, RegionKind};
use hookpair::dyck::{build_dyck, build_sigma, pair_updown, DyckPath, LabelKind};
use hookpair::projective::{check_projective, is_class_b, DiagonalKind, DiagonalSpec};

const UNIT: usize = 28;

/// Parses `"a,b,c"` into a partition, padding with zeros up to `k` parts.
pub fn parse_case(alpha: &str, k: usize, n: usize) -> Result<Partition, String> {
    let parts = alpha
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("not a part: {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::padded(parts, k, n).map_err(|e| e.to_string())
}

/// SVG drawing of a region. `dots` marks the cells with arm `dots - 1`;
/// `diagonal` draws the p/q boundary and needs a class-B input.
pub fn region_svg(p: &Partition, region: &str, dots: Option<usize>, diagonal: bool) -> Result<String, String> {
    let kind: RegionKind = region.parse().map_err(|e: hookpair::DiagramError| e.to_string())?;
    let g = build_region(p, kind);
    let (r0, r1, c0, c1) = g
        .bounds()
        .ok_or_else(|| format!("region {} is empty for {p}", kind.tag()))?;
    let marks = match dots {
        Some(i) => arm_slice(&g, i).map_err(|e| e.to_string())?,
        None => CellSet::new(),
    };
    let diag = if diagonal {
        let b = is_class_b(p)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{p} is not of class B"))?;
        let dk = DiagonalKind::try_from(kind).map_err(|e| e.to_string())?;
        Some(DiagonalSpec::new(dk, &b))
    } else {
        None
    };

    let (w, h) = ((c1 - c0 + 1) * UNIT, (r1 - r0 + 1) * UNIT);
    // screen position of the lower-left corner of a cell
    let x = |col: usize| (col - c0) * UNIT;
    let y = |row: usize| (r1 - row + 1) * UNIT;
    let mut svg = open_svg(w + 2, h + 2);
    for c in g.iter() {
        let below = diag.as_ref().is_some_and(|d| d.on_or_below(c));
        let fill = if below { "#dbe8f7" } else { "#ffffff" };
        let _ = write!(
            svg,
            r##"<rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="#333"><title>({}, {})</title></rect>"##,
            x(c.col) + 1,
            y(c.row) - UNIT + 1,
            c.row,
            c.col
        );
        if marks.contains(c) {
            let _ = write!(
                svg,
                r##"<circle cx="{}" cy="{}" r="5" fill="#c0392b"/>"##,
                x(c.col) + 1 + UNIT / 2,
                y(c.row) + 1 - UNIT / 2
            );
        }
    }
    if let Some(d) = &diag {
        // staircase boundary between the cells on or below the diagonal and the rest
        for c in g.iter() {
            let right = hookpair::Cell::new(c.row, c.col + 1);
            if d.on_or_below(c) && g.contains(right) && !d.on_or_below(right) {
                let xx = x(right.col) + 1;
                let _ = write!(
                    svg,
                    r##"<line x1="{xx}" y1="{}" x2="{xx}" y2="{}" stroke="#1f4e8c" stroke-width="4"/>"##,
                    y(c.row) + 1 - UNIT,
                    y(c.row) + 1
                );
            }
        }
    }
    svg.push_str("</svg>");
    Ok(svg)
}

fn open_svg(w: usize, h: usize) -> String {
    format!(r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#)
}

/// The labelled word, pairing and an SVG of the Dyck path for arm index `i`,
/// as a JSON object `{"sigma", "pairing", "svg"}`.
pub fn dyck_json(p: &Partition, i: usize) -> Result<String, String> {
    let sigma = build_sigma(p, i).map_err(|e| e.to_string())?;
    let path = build_dyck(&sigma).map_err(|e| e.to_string())?;
    let pairing = pair_updown(&path).map_err(|e| e.to_string())?;
    let value = serde_json::json!({
        "sigma": sigma.to_string(),
        "pairing": pairing.as_slice(),
        "svg": path_svg(&path),
    });
    Ok(value.to_string())
}

fn path_svg(path: &DyckPath) -> String {
    let step = UNIT;
    let top = path.max_height() * step + 10;
    let (w, h) = (path.steps().len() * step + 20, top + 30);
    let mut svg = open_svg(w, h);
    let mut points = String::new();
    for (t, height) in path.ordinates().iter().enumerate() {
        let _ = write!(points, "{},{} ", 10 + t * step, top - height * step);
    }
    let _ = write!(
        svg,
        r##"<polyline points="{}" fill="none" stroke="#1f4e8c" stroke-width="3"/>"##,
        points.trim_end()
    );
    for (t, s) in path.steps().iter().enumerate() {
        let (name, color) = match s.label.kind {
            LabelKind::X => ("x", "#1f4e8c"),
            LabelKind::Z => ("z", "#c0392b"),
        };
        let _ = write!(
            svg,
            r##"<text x="{}" y="{}" font-size="11" text-anchor="middle" fill="{color}">{name}{}</text>"##,
            10 + t * step + step / 2,
            top + 20,
            s.label.index
        );
    }
    svg.push_str("</svg>");
    svg
}

/// Runs one identity check and summarises it as JSON:
/// `{"theorem", "verdict", "problem", "report"}`.
pub fn verify_json(p: &Partition, theorem: &str) -> Result<String, String> {
    let which: Theorem = theorem.parse()?;
    let (passed, problem, report) = if which == Theorem::Projective {
        let b = is_class_b(p)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{p} is not of class B"))?;
        let r = check_projective(&b);
        (r.passed(), r.first_problem(), serde_json::to_value(&r))
    } else {
        let r = check_theorem(p, which);
        (r.passed(), r.first_problem(), serde_json::to_value(&r))
    };
    let value = serde_json::json!({
        "theorem": which,
        "verdict": if passed { "pass" } else { "fail" },
        "problem": problem,
        "report": report.map_err(|e| e.to_string())?,
    });
    Ok(value.to_string())
}
