//! Self-contained SVG plots of boundary curves.

use std::fmt::Write;

use numrange_core::Complex64;

const SIZE: f64 = 800.0;
const PAD: f64 = 0.1;

/// Maps data coordinates into the square viewbox, y pointing up.
struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[Complex64]) -> Self {
        let (mut lo_x, mut hi_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo_x = lo_x.min(p.re);
            hi_x = hi_x.max(p.re);
            lo_y = lo_y.min(p.im);
            hi_y = hi_y.max(p.im);
        }
        if points.is_empty() {
            (lo_x, hi_x, lo_y, hi_y) = (-1.0, 1.0, -1.0, 1.0);
        }
        let mut span = (hi_x - lo_x).max(hi_y - lo_y);
        if span <= 0.0 {
            span = 1.0;
        }
        let span = span * (1.0 + 2.0 * PAD);
        let (cx, cy) = ((lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0);
        Frame {
            x0: cx - span / 2.0,
            y1: cy + span / 2.0,
            scale: SIZE / span,
        }
    }

    fn map(&self, z: Complex64) -> (f64, f64) {
        ((z.re - self.x0) * self.scale, (self.y1 - z.im) * self.scale)
    }
}

fn coord(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// The curve as one `<path>`, coordinate axes when the origin is in view,
/// and a small circle at each marker.
pub fn render(curve: &[Complex64], closed: bool, markers: &[Complex64]) -> String {
    let all: Vec<Complex64> = curve.iter().chain(markers).copied().collect();
    let frame = Frame::fit(&all);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="800" height="800" fill="white"/>"#
    );

    let (ox, oy) = frame.map(Complex64::new(0.0, 0.0));
    if (0.0..=SIZE).contains(&oy) {
        let _ = writeln!(
            out,
            r#"<line x1="0" y1="{y}" x2="800" y2="{y}" stroke="gray" stroke-width="1"/>"#,
            y = coord(oy)
        );
    }
    if (0.0..=SIZE).contains(&ox) {
        let _ = writeln!(
            out,
            r#"<line x1="{x}" y1="0" x2="{x}" y2="800" stroke="gray" stroke-width="1"/>"#,
            x = coord(ox)
        );
    }

    if !curve.is_empty() {
        let mut d = String::new();
        for (i, z) in curve.iter().enumerate() {
            let (x, y) = frame.map(*z);
            let _ = write!(
                d,
                "{}{} {}",
                if i == 0 { "M" } else { " L" },
                coord(x),
                coord(y)
            );
        }
        if closed {
            d.push_str(" Z");
        }
        let _ = writeln!(
            out,
            r#"<path d="{d}" fill="none" stroke="black" stroke-width="2"/>"#
        );
    }
    for m in markers {
        let (x, y) = frame.map(*m);
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="5" fill="red"/>"#,
            coord(x),
            coord(y)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_layout() {
        let sq = [
            Complex64::new(-1.0, -1.0),
            Complex64::new(1.0, -1.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(-1.0, 1.0),
        ];
        let svg = render(&sq, true, &[Complex64::new(1.0, 0.0)]);
        // span 2 padded to 2.4, so ±1 maps to 400 ± 333.333
        assert!(
            svg.contains(
                r#"d="M66.667 733.333 L733.333 733.333 L733.333 66.667 L66.667 66.667 Z""#
            ),
            "{svg}"
        );
        assert!(svg.contains(r#"<line x1="0" y1="400.000""#));
        assert!(svg.contains(r#"<circle cx="733.333" cy="400.000""#));
        assert_eq!(svg.matches("<path").count(), 1);
    }

    #[test]
    fn degenerate_input_does_not_divide_by_zero() {
        let svg = render(&[Complex64::new(0.5, 0.0)], true, &[]);
        assert!(svg.contains(r#"d="M400.000 400.000 Z""#), "{svg}");
        assert!(!svg.contains("NaN"));
    }
}
