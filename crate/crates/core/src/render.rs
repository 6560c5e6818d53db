//! SVG drawings of chord diagrams.
//!
//! Point 0 sits at the top of the circle and indices increase clockwise.
//! Chords are straight segments.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::lintel::SortedLintel;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    pub radius: f64,
    pub margin: f64,
    pub font_size: f64,
    pub stroke_width: f64,
    pub point_radius: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            radius: 160.0,
            margin: 40.0,
            font_size: 12.0,
            stroke_width: 1.5,
            point_radius: 3.0,
        }
    }
}

/// Position of point `k` out of `m` on a circle of radius `r` centred at `c`.
pub fn point_position(k: usize, m: usize, r: f64, c: f64) -> (f64, f64) {
    let angle = PI / 2.0 - 2.0 * PI * k as f64 / m as f64;
    (c + r * angle.cos(), c - r * angle.sin())
}

/// Rounds to three decimals and avoids printing `-0.000`.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

pub fn render_svg(l: &SortedLintel, opts: &SvgOptions) -> String {
    let m = l.points();
    let c = opts.radius + opts.margin;
    let side = 2.0 * c;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = num(side)
    );
    let _ = writeln!(out, "  <title>{l}</title>");
    let _ = writeln!(
        out,
        r#"  <circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="{s}"/>"#,
        c = num(c),
        r = num(opts.radius),
        s = num(opts.stroke_width)
    );
    for chord in l.chords() {
        let (x1, y1) = point_position(chord.first, m, opts.radius, c);
        let (x2, y2) = point_position(chord.second, m, opts.radius, c);
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{}"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            num(opts.stroke_width)
        );
    }
    let label_r = opts.radius + opts.font_size * 1.2;
    for k in 0..m {
        let (x, y) = point_position(k, m, opts.radius, c);
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(x),
            num(y),
            num(opts.point_radius)
        );
        let (lx, ly) = point_position(k, m, label_r, c);
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="sans-serif" text-anchor="middle" dominant-baseline="central">{k}</text>"#,
            num(lx),
            num(ly),
            num(opts.font_size)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_zero_is_on_top_and_indices_run_clockwise() {
        let (x0, y0) = point_position(0, 4, 10.0, 50.0);
        assert!((x0 - 50.0).abs() < 1e-9 && (y0 - 40.0).abs() < 1e-9);
        let (x1, y1) = point_position(1, 4, 10.0, 50.0);
        assert!((x1 - 60.0).abs() < 1e-9 && (y1 - 50.0).abs() < 1e-9);
    }

    #[test]
    fn single_chord_svg() {
        let l = SortedLintel::from_pairs(&[(0, 1)]).unwrap();
        let svg = render_svg(&l, &SvgOptions::default());
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<text").count(), 2);
        assert!(svg.contains(r#"x1="200.000" y1="40.000" x2="200.000" y2="360.000""#));
        assert_eq!(svg, render_svg(&l, &SvgOptions::default()));
    }
}
