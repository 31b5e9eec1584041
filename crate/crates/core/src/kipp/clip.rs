//! Sutherland–Hodgman clipping of a convex polygon by half-planes
//! `x·cos θ + y·sin θ ≤ h`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

/// Counter-clockwise square `[−r, r]²`.
pub(crate) fn square(r: f64) -> Vec<Complex64> {
    alloc::vec![
        Complex64::new(-r, -r),
        Complex64::new(r, -r),
        Complex64::new(r, r),
        Complex64::new(-r, r),
    ]
}

/// Keeps the part of `poly` with `Re(e^{−iθ} z) ≤ h`.
pub(crate) fn clip_half_plane(poly: &[Complex64], theta: f64, h: f64) -> Vec<Complex64> {
    let (s, c) = theta.sin_cos();
    let dist = |p: Complex64| p.re * c + p.im * s - h;
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = poly[i];
        let next = poly[(i + 1) % n];
        let dc = dist(cur);
        let dn = dist(next);
        if dc <= 0.0 {
            out.push(cur);
        }
        if (dc <= 0.0) != (dn <= 0.0) {
            let t = dc / (dc - dn);
            out.push(cur + (next - cur) * t);
        }
    }
    out
}

/// Drops consecutive vertices closer than `eps` (cyclically).
pub(crate) fn dedup(poly: Vec<Complex64>, eps: f64) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::with_capacity(poly.len());
    for p in poly {
        if out.last().is_none_or(|q| (p - q).norm() > eps) {
            out.push(p);
        }
    }
    while out.len() > 1 && (out[0] - out[out.len() - 1]).norm() <= eps {
        out.pop();
    }
    out
}

pub(crate) fn diameter(poly: &[Complex64]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in poly.iter().enumerate() {
        for q in &poly[i + 1..] {
            d = d.max((p - q).norm());
        }
    }
    d
}

pub(crate) fn centroid(poly: &[Complex64]) -> Complex64 {
    let n = poly.len().max(1) as f64;
    poly.iter().sum::<Complex64>() / n
}

/// Twice the signed area (positive for counter-clockwise order).
#[cfg(test)]
pub(crate) fn signed_area2(poly: &[Complex64]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let p = poly[i];
            let q = poly[(i + 1) % n];
            p.re * q.im - q.re * p.im
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn clipping_square_to_triangle() {
        let sq = square(1.0);
        // keep x + y ≤ 0
        let out = clip_half_plane(&sq, PI / 4.0, 0.0);
        let out = dedup(out, 1e-12);
        assert_eq!(out.len(), 3);
        assert!(signed_area2(&out) > 0.0);
        assert!((signed_area2(&out) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_half_plane_empties_polygon() {
        let out = clip_half_plane(&square(1.0), 0.0, -2.0);
        assert!(out.is_empty());
    }

    #[test]
    fn regular_polygon_from_tangent_lines() {
        let mut poly = square(2.0);
        let m = 64;
        for i in 0..m {
            let theta = -PI + (i + 1) as f64 * 2.0 * PI / m as f64;
            poly = clip_half_plane(&poly, theta, 1.0);
        }
        let poly = dedup(poly, 1e-12);
        assert_eq!(poly.len(), m);
        let circum = 1.0 / (PI / m as f64).cos();
        for p in &poly {
            assert!((p.norm() - circum).abs() < 1e-12);
        }
        assert!(centroid(&poly).norm() < 1e-12);
        assert!((diameter(&poly) - 2.0 * circum).abs() < 1e-12);
    }
}
