//! Rank-k numerical ranges as intersections of supporting half-planes.
//!
//! `Λₖ(A) = { z : λ_{n−k+1}(θ) ≤ Re(e^{−iθ}z) ≤ λₖ(θ) for all θ }`. Since
//! `λ_{n−k+1}(θ) = −λₖ(θ+π)`, the lower bounds are the upper bounds at the
//! opposite angle, so only the upper half-planes over the full grid are
//! intersected.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::clip::{centroid, clip_half_plane, dedup, diameter, square};
use super::{check_grid, sweep};
use crate::matcore::ComplexMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum RankKVerdict {
    EmptySet,
    SinglePoint(Complex64),
    /// Counter-clockwise vertices.
    Polygon(Vec<Complex64>),
}

impl RankKVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            RankKVerdict::EmptySet => "empty",
            RankKVerdict::SinglePoint(_) => "point",
            RankKVerdict::Polygon(_) => "polygon",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankKRange {
    pub k: usize,
    pub verdict: RankKVerdict,
}

impl RankKRange {
    /// `max Re(e^{−iθ}z)` over the set, or `None` for the empty set.
    pub fn support(&self, theta: f64) -> Option<f64> {
        let w = Complex64::from_polar(1.0, -theta);
        match &self.verdict {
            RankKVerdict::EmptySet => None,
            RankKVerdict::SinglePoint(z) => Some((w * z).re),
            RankKVerdict::Polygon(v) => v.iter().map(|z| (w * z).re).reduce(f64::max),
        }
    }

    /// Membership with slack `eps` against every edge of the polygon.
    pub fn contains(&self, z: Complex64, eps: f64) -> bool {
        match &self.verdict {
            RankKVerdict::EmptySet => false,
            RankKVerdict::SinglePoint(p) => (z - p).norm() <= eps,
            RankKVerdict::Polygon(v) => {
                let n = v.len();
                (0..n).all(|i| {
                    let a = v[i];
                    let b = v[(i + 1) % n];
                    let edge = b - a;
                    let len = edge.norm();
                    if len == 0.0 {
                        return true;
                    }
                    // left of the edge for counter-clockwise order
                    let cross = edge.re * (z - a).im - edge.im * (z - a).re;
                    cross / len >= -eps
                })
            }
        }
    }
}

/// Classifies the intersection of the grid half-planes
/// `Re(e^{−iθ}z) ≤ λₖ(θ)`.
///
/// The classification clips with every half-plane pushed out by `tol/4`:
/// fewer than three surviving vertices means [`RankKVerdict::EmptySet`], a
/// diameter below `tol` means [`RankKVerdict::SinglePoint`] at the centroid.
/// Polygons are then recomputed without the slack.
pub fn rank_k_range(a: &ComplexMatrix, k: usize, m: usize, tol: f64) -> Result<RankKRange> {
    let n = a.dim();
    if k < 1 || k > n {
        return Err(Error::InvalidK { n, k });
    }
    check_grid(m)?;
    let coarse = rank_k_once(a, k, m, tol)?;
    let fine = rank_k_once(a, k, 2 * m, tol)?;
    if coarse.verdict.kind() != fine.verdict.kind() {
        return Err(Error::GridUnstable {
            coarse: m,
            fine: 2 * m,
        });
    }
    Ok(coarse)
}

fn rank_k_once(a: &ComplexMatrix, k: usize, m: usize, tol: f64) -> Result<RankKRange> {
    let sw = sweep(a, m)?;
    let level = sw.level(k);
    let norm = a.frobenius_norm();
    let half_side = if norm > 0.0 { 2.0 * norm } else { 1.0 };
    let eps = 1e-12 * half_side;

    let intersect = |slack: f64| {
        let mut poly = square(half_side);
        for (&theta, &h) in sw.thetas.iter().zip(&level) {
            poly = clip_half_plane(&poly, theta, h + slack);
            if poly.is_empty() {
                break;
            }
        }
        dedup(poly, eps)
    };

    let relaxed = intersect(0.25 * tol);
    let verdict = if relaxed.len() < 3 {
        RankKVerdict::EmptySet
    } else if diameter(&relaxed) < tol {
        RankKVerdict::SinglePoint(centroid(&relaxed))
    } else {
        let exact = intersect(0.0);
        if exact.len() >= 3 {
            RankKVerdict::Polygon(exact)
        } else {
            RankKVerdict::Polygon(relaxed)
        }
    };
    Ok(RankKRange { k, verdict })
}
