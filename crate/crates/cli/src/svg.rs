//! Scatter plots of rank ≤ 2 weight diagrams.

use std::fmt::Write;

use cayley_core::rootsys::{Family, Weight};
use cayley_core::weightlat::WeightDiagram;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 40.0;

/// A weight, its multiplicity and its planar position.
pub type Point = (Weight, u64, f64, f64);

/// Planar coordinates of a weight: `A₁` on a line, `A₂` projected from the
/// zero-sum plane of ℚ³ onto an orthonormal basis, `B₂` as is.
pub fn plane_coords(family: Family, w: &Weight) -> Option<(f64, f64)> {
    let c: Vec<f64> = w.coords().iter().map(|x| x.to_f64()).collect();
    let s2 = std::f64::consts::SQRT_2;
    match (family, c.as_slice()) {
        (Family::A, [a, b]) => Some(((a - b) / s2, 0.0)),
        (Family::A, [a, b, d]) => Some(((a - b) / s2, (a + b - 2.0 * d) / 6f64.sqrt())),
        (Family::B, [a, b]) => Some((*a, *b)),
        _ => None,
    }
}

/// Renders one circle per weight with its multiplicity as a label.
pub fn render(family: Family, d: &WeightDiagram) -> Option<(String, Vec<Point>)> {
    let pts: Vec<Point> = d
        .mult
        .iter()
        .map(|(w, &m)| plane_coords(family, w).map(|(x, y)| (w.clone(), m, x, y)))
        .collect::<Option<_>>()?;
    let extent = pts.iter().fold(1.0f64, |e, p| e.max(p.2.abs()).max(p.3.abs()));
    let k = (SIZE / 2.0 - MARGIN) / extent;
    let (cx, cy) = (SIZE / 2.0, SIZE / 2.0);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(s, r##"<line x1="0" y1="{cy}" x2="{SIZE}" y2="{cy}" stroke="#cccccc"/>"##);
    let _ = writeln!(s, r##"<line x1="{cx}" y1="0" x2="{cx}" y2="{SIZE}" stroke="#cccccc"/>"##);
    for (w, m, x, y) in &pts {
        let (px, py) = (cx + k * x, cy - k * y);
        let _ = writeln!(
            s,
            r##"<circle cx="{px:.3}" cy="{py:.3}" r="{}" fill="#1f77b4"><title>{w}</title></circle>"##,
            4 + 2 * (*m).min(5)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-size="12" font-family="sans-serif">{m}</text>"#,
            px + 8.0,
            py - 8.0
        );
    }
    s.push_str("</svg>\n");
    Some((s, pts))
}
