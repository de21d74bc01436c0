//! Scatter plot of roots in the window `Re ∈ [-1, 1]`, `Im ∈ [0, 2]`.

use std::fmt::Write;

use num_complex::Complex64;

pub const SIZE: f64 = 800.0;
pub const RE_RANGE: (f64, f64) = (-1.0, 1.0);
pub const IM_RANGE: (f64, f64) = (0.0, 2.0);
pub const ALTERNATING_COLOUR: &str = "#d22";
pub const OTHER_COLOUR: &str = "#22d";
pub const POINT_RADIUS: f64 = 2.0;

pub fn in_viewport(z: Complex64) -> bool {
    (RE_RANGE.0..=RE_RANGE.1).contains(&z.re) && (IM_RANGE.0..=IM_RANGE.1).contains(&z.im)
}

fn to_px(z: Complex64) -> (f64, f64) {
    let x = (z.re - RE_RANGE.0) / (RE_RANGE.1 - RE_RANGE.0) * SIZE;
    let y = (IM_RANGE.1 - z.im) / (IM_RANGE.1 - IM_RANGE.0) * SIZE;
    (x, y)
}

/// Renders `(point, alternating)` pairs; points outside the window are dropped.
pub fn render(points: &[(Complex64, bool)]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    // upper half of |t| = 1: from t = -1 to t = 1 through t = i
    let (x0, y0) = to_px(Complex64::new(-1.0, 0.0));
    let (x1, y1) = to_px(Complex64::new(1.0, 0.0));
    let r = SIZE / (RE_RANGE.1 - RE_RANGE.0);
    let _ = writeln!(
        out,
        r##"<path d="M {x0} {y0} A {r} {r} 0 0 1 {x1} {y1}" fill="none" stroke="#888" stroke-width="1"/>"##
    );
    for &(z, alternating) in points.iter().filter(|(z, _)| in_viewport(*z)) {
        let (x, y) = to_px(z);
        let colour = if alternating {
            ALTERNATING_COLOUR
        } else {
            OTHER_COLOUR
        };
        let _ = writeln!(
            out,
            r##"<circle cx="{x:.3}" cy="{y:.3}" r="{POINT_RADIUS}" fill="{colour}"/>"##
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners_map_to_the_frame() {
        assert_eq!(to_px(Complex64::new(-1.0, 2.0)), (0.0, 0.0));
        assert_eq!(to_px(Complex64::new(1.0, 0.0)), (800.0, 800.0));
        assert_eq!(to_px(Complex64::new(0.0, 1.0)), (400.0, 400.0));
    }

    #[test]
    fn points_outside_are_dropped() {
        let svg = render(&[
            (Complex64::new(0.0, 1.0), true),
            (Complex64::new(0.0, -1.0), false),
        ]);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains(ALTERNATING_COLOUR));
        assert!(svg.contains(r#"viewBox="0 0 800 800""#));
    }
}
