//! SVG rendering of checkerboard polygons: a fixed 1000 by 1000
//! viewport, marked points on a circle, radical curves as chords,
//! loops as spokes to the puncture, and one shaded region per
//! chordless cycle, its corners taken from the crossings of the
//! cycle's radical curves.

use std::fmt::Write;

use syzygy::cycles::CycleData;
use syzygy::geom::{Arc, ConfigA, ConfigD, Sign};
use syzygy::quiver::{Quiver, VertexIx};

const SIZE: f64 = 1000.0;
const CENTER: f64 = 500.0;
const RADIUS: f64 = 430.0;
const LABEL_RADIUS: f64 = 462.0;
const SPOKE_GAP: f64 = 10.0;

fn boundary_point(m: u32, i: u32, radius: f64) -> (f64, f64) {
    let turn = std::f64::consts::TAU * f64::from((i - 1) % m) / f64::from(m);
    let angle = std::f64::consts::FRAC_PI_2 - turn;
    (CENTER + radius * angle.cos(), CENTER - radius * angle.sin())
}

fn segment_crossing(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
) -> Option<(f64, f64)> {
    let (rx, ry) = (b.0 - a.0, b.1 - a.1);
    let (sx, sy) = (d.0 - c.0, d.1 - c.1);
    let denom = rx * sy - ry * sx;
    if denom.abs() < 1e-9 {
        return None;
    }
    let (qx, qy) = (c.0 - a.0, c.1 - a.1);
    let t = (qx * sy - qy * sx) / denom;
    let u = (qx * ry - qy * rx) / denom;
    if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
        Some((a.0 + t * rx, a.1 + t * ry))
    } else {
        None
    }
}

struct Scene {
    out: String,
}

impl Scene {
    fn new() -> Self {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
        );
        let _ = writeln!(out, "  <rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"#ffffff\"/>");
        Scene { out }
    }

    fn outline(&mut self, m: u32) {
        let mut points = String::new();
        for i in 1..=m {
            let (x, y) = boundary_point(m, i, RADIUS);
            let _ = write!(points, "{x:.2},{y:.2} ");
        }
        let _ = writeln!(
            self.out,
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1.5\"/>",
            points.trim_end()
        );
    }

    fn region(&mut self, corners: &[(f64, f64)], title: &str) {
        let mut points = String::new();
        for (x, y) in corners {
            let _ = write!(points, "{x:.2},{y:.2} ");
        }
        let _ = writeln!(
            self.out,
            "  <polygon points=\"{}\" fill=\"#c7d9f0\" stroke=\"none\"><title>{title}</title></polygon>",
            points.trim_end()
        );
    }

    fn curve(&mut self, a: (f64, f64), b: (f64, f64), title: &str) {
        let _ = writeln!(
            self.out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#1f4e99\" stroke-width=\"2.5\"><title>{title}</title></line>",
            a.0, a.1, b.0, b.1
        );
    }

    fn marks(&mut self, m: u32) {
        for i in 1..=m {
            let (x, y) = boundary_point(m, i, RADIUS);
            let _ = writeln!(
                self.out,
                "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"#333333\"/>"
            );
            let (lx, ly) = boundary_point(m, i, LABEL_RADIUS);
            let _ = writeln!(
                self.out,
                "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"22\" font-family=\"Helvetica, sans-serif\" fill=\"#333333\" text-anchor=\"middle\" dominant-baseline=\"central\">{i}</text>"
            );
        }
    }

    fn puncture(&mut self) {
        let _ = writeln!(
            self.out,
            "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"5\" fill=\"#333333\"/>"
        );
    }

    fn sign_label(&mut self, at: (f64, f64), sign: Sign) {
        let glyph = match sign {
            Sign::Plus => "+",
            Sign::Minus => "\u{2212}",
        };
        let _ = writeln!(
            self.out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"20\" font-family=\"Helvetica, sans-serif\" fill=\"#1f4e99\" text-anchor=\"middle\" dominant-baseline=\"central\">{glyph}</text>",
            at.0, at.1
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn diag_segment(cfg: &ConfigA, v: VertexIx) -> ((f64, f64), (f64, f64)) {
    let d = cfg.diagonal(v).expect("validated configuration");
    let m = 2 * cfg.n;
    (
        boundary_point(m, d.tail(), RADIUS),
        boundary_point(m, d.head(), RADIUS),
    )
}

fn arc_segment(cfg: &ConfigD, v: VertexIx) -> ((f64, f64), (f64, f64)) {
    let n = cfg.n;
    match cfg.arc(v).expect("validated configuration") {
        Arc::Plain { tail, head, .. } => (
            boundary_point(n, tail, RADIUS),
            boundary_point(n, head, RADIUS),
        ),
        Arc::Loop { foot, sign, .. } => {
            let (fx, fy) = boundary_point(n, foot, RADIUS);
            let len = ((CENTER - fx).powi(2) + (CENTER - fy).powi(2)).sqrt();
            let (ux, uy) = ((CENTER - fx) / len, (CENTER - fy) / len);
            let side = match sign {
                Sign::Plus => 1.0,
                Sign::Minus => -1.0,
            };
            (
                (fx, fy),
                (CENTER - uy * SPOKE_GAP * side, CENTER + ux * SPOKE_GAP * side),
            )
        }
    }
}

fn shaded_regions(
    q: &Quiver,
    segment: impl Fn(VertexIx) -> ((f64, f64), (f64, f64)),
) -> Vec<(Vec<(f64, f64)>, String)> {
    let data = CycleData::new(q);
    let mut regions = Vec::new();
    for cycle in &data.cycles {
        let mut corners = Vec::new();
        for &a in &cycle.arrows {
            let arr = q.arrow(a);
            let (p1, p2) = (segment(arr.src), segment(arr.tgt));
            match segment_crossing(p1.0, p1.1, p2.0, p2.1) {
                Some(p) => corners.push(p),
                None => {
                    corners.clear();
                    break;
                }
            }
        }
        if !corners.is_empty() {
            regions.push((corners, cycle.display(q)));
        }
    }
    regions
}

/// Draws the checkerboard polygon of a two-sided model: the `2n`-gon,
/// its radical diagonals, and the shaded cycle regions.
pub fn polygon_a(q: &Quiver, cfg: &ConfigA) -> String {
    let m = 2 * cfg.n;
    let mut scene = Scene::new();
    scene.outline(m);
    for (corners, title) in shaded_regions(q, |v| diag_segment(cfg, v)) {
        scene.region(&corners, &title);
    }
    for v in q.vertices() {
        let (a, b) = diag_segment(cfg, v);
        let d = cfg.diagonal(v).expect("validated configuration");
        scene.curve(a, b, &format!("{}: {}", q.vertex_name(v), d));
    }
    scene.marks(m);
    scene.finish()
}

/// Draws the punctured polygon of a one-sided model: `n` marked
/// points, the puncture, plain arcs as chords, loops as spokes with
/// their sign, and the shaded cycle regions.
pub fn polygon_d(q: &Quiver, cfg: &ConfigD) -> String {
    let n = cfg.n;
    let mut scene = Scene::new();
    scene.outline(n);
    for (corners, title) in shaded_regions(q, |v| arc_segment(cfg, v)) {
        scene.region(&corners, &title);
    }
    for v in q.vertices() {
        let (a, b) = arc_segment(cfg, v);
        let arc = cfg.arc(v).expect("validated configuration");
        scene.curve(a, b, &format!("{}: {}", q.vertex_name(v), arc));
        if let Arc::Loop { sign, .. } = arc {
            let label = (
                b.0 + (b.0 - CENTER) * 2.4,
                b.1 + (b.1 - CENTER) * 2.4,
            );
            scene.sign_label(label, sign);
        }
    }
    scene.puncture();
    scene.marks(n);
    scene.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_point_of_perpendicular_chords_is_the_center() {
        let p = segment_crossing((0.0, 5.0), (10.0, 5.0), (5.0, 0.0), (5.0, 10.0)).unwrap();
        assert!((p.0 - 5.0).abs() < 1e-9 && (p.1 - 5.0).abs() < 1e-9);
        assert!(segment_crossing((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)).is_none());
    }

    #[test]
    fn boundary_points_stay_on_the_circle() {
        for i in 1..=14 {
            let (x, y) = boundary_point(14, i, RADIUS);
            let r = ((x - CENTER).powi(2) + (y - CENTER).powi(2)).sqrt();
            assert!((r - RADIUS).abs() < 1e-9);
        }
        let top = boundary_point(14, 1, RADIUS);
        assert!((top.0 - CENTER).abs() < 1e-9 && top.1 < CENTER);
    }
}
