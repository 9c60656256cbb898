//! Fixed-viewport scatter of the weight lattice in plane coordinates.

use std::collections::BTreeSet;
use std::fmt::Write;

use foliant_core::foliation::gamma_basis;
use foliant_core::git::{weight_of_basis, WeightSupport};

const CELL: i64 = 40;
const MARGIN: i64 = 40;

/// Every basis weight of degree `d` in grey, the support in black, the origin
/// as a cross. Plane coordinates are `(w0 - w2, w1 - w2)`.
pub fn weight_diagram(degree: u32, support: &WeightSupport) -> String {
    let lattice: BTreeSet<(i64, i64)> = gamma_basis(degree)
        .iter()
        .map(|b| weight_of_basis(b).plane())
        .collect();
    let points: Vec<(i64, i64)> = lattice.iter().copied().chain([(0, 0)]).collect();
    let (min_u, max_u) = bounds(points.iter().map(|p| p.0));
    let (min_v, max_v) = bounds(points.iter().map(|p| p.1));
    let width = (max_u - min_u) * CELL + 2 * MARGIN;
    let height = (max_v - min_v) * CELL + 2 * MARGIN;
    let sx = |u: i64| MARGIN + (u - min_u) * CELL;
    // SVG y grows downwards.
    let sy = |v: i64| MARGIN + (max_v - v) * CELL;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    for u in min_u..=max_u {
        let _ = writeln!(
            out,
            r##"<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="#dddddd"/>"##,
            x = sx(u),
            y0 = sy(max_v),
            y1 = sy(min_v)
        );
    }
    for v in min_v..=max_v {
        let _ = writeln!(
            out,
            r##"<line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="#dddddd"/>"##,
            x0 = sx(min_u),
            x1 = sx(max_u),
            y = sy(v)
        );
    }
    let (ox, oy) = (sx(0), sy(0));
    let _ = writeln!(
        out,
        r#"<path d="M {} {oy} L {} {oy} M {ox} {} L {ox} {}" stroke="red" stroke-width="2"/>"#,
        ox - 8,
        ox + 8,
        oy - 8,
        oy + 8
    );
    for &(u, v) in &lattice {
        let _ = writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="4" fill="#bbbbbb"/>"##,
            sx(u),
            sy(v)
        );
    }
    for (w, fields) in support.classes() {
        let (u, v) = w.plane();
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="7" fill="black"><title>{} : {}</title></circle>"#,
            sx(u),
            sy(v),
            w,
            fields.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = i64>) -> (i64, i64) {
    values.fold((i64::MAX, i64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)))
}
