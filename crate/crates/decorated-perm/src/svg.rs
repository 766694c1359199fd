use std::fmt::Write as _;

use crate::{DecoratedPermutation, LoopOrientation};

/// Renders the chord diagram as an SVG document: `n` points on a circle
/// clockwise from the top, straight arcs with arrowheads at their heads, and
/// small oriented loops at fixed points.
pub fn chord_diagram_svg(w: &DecoratedPermutation) -> String {
    let n = w.n();
    let (cx, cy, r) = (200.0, 200.0, 160.0);
    let pos = |i: usize| {
        // Clockwise from the top in screen coordinates (y grows downward).
        let theta = std::f64::consts::TAU * (i as f64 - 1.0) / n as f64;
        (cx + r * theta.sin(), cy - r * theta.cos())
    };
    let mut s = String::new();
    s.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n");
    s.push_str("  <defs><marker id=\"head\" orient=\"auto\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n");
    writeln!(
        s,
        "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" fill=\"none\" stroke=\"#ccc\"/>"
    )
    .unwrap();
    for arc in w.arcs() {
        let (x1, y1) = pos(arc.tail);
        match arc.loop_orientation {
            None => {
                let (x2, y2) = pos(arc.head);
                // Stop slightly short of the head so the arrowhead is visible.
                let (dx, dy) = (x2 - x1, y2 - y1);
                let len = (dx * dx + dy * dy).sqrt();
                let (ex, ey) = (x2 - 8.0 * dx / len, y2 - 8.0 * dy / len);
                writeln!(
                    s,
                    "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{ex:.2}\" y2=\"{ey:.2}\" stroke=\"black\" marker-end=\"url(#head)\"/>"
                )
                .unwrap();
            }
            Some(o) => {
                // A small loop just inside the circle; the sweep flag encodes
                // the orientation.
                let toward = ((cx - x1) / r * 14.0, (cy - y1) / r * 14.0);
                let (lx, ly) = (x1 + toward.0, y1 + toward.1);
                let sweep = if o == LoopOrientation::Cw { 1 } else { 0 };
                writeln!(
                    s,
                    "  <path d=\"M {x1:.2} {y1:.2} A 10 10 0 1 {sweep} {lx:.2} {ly:.2}\" fill=\"none\" stroke=\"black\" marker-end=\"url(#head)\"/>"
                )
                .unwrap();
            }
        }
    }
    for i in 1..=n {
        let (x, y) = pos(i);
        let (tx, ty) = (cx + (x - cx) * 1.12, cy + (y - cy) * 1.12);
        writeln!(s, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\"/>").unwrap();
        writeln!(
            s,
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\">{i}</text>"
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
