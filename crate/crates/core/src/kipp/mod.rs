//! Support-function sweeps and everything derived from them.
//!
//! For a square matrix `A` the eigenvalues `λ₁(θ) ≥ … ≥ λₙ(θ)` of
//! `Re(e^{−iθ}A)` determine the lines `e^{iθ}(λⱼ(θ) + iℝ)`; their envelope is
//! the Kippenhahn curve and its convex hull is the numerical range `W(A)`.
//! `λ₁` is the support function of `W(A)`.
//!
//! Verdict-producing operations are evaluated on the requested grid and
//! again on a grid twice as fine; disagreement is reported as
//! [`Error::GridUnstable`].

mod clip;
mod rank_k;

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::matcore::{
    char_poly_with_tol, hermitian_eigen, ComplexMatrix, HermitianEigen, RealPolynomial,
};
use crate::optimize::golden_min;
use crate::{Error, Result, DEFAULT_TOL};

pub use rank_k::{rank_k_range, RankKRange, RankKVerdict};

/// Half-degree resolution.
pub const DEFAULT_GRID: usize = 720;
/// Relative factor in the Kippenhahn circle acceptance threshold
/// `CIRCLE_TOL · (1 + ‖A‖_F)ⁿ`.
pub const CIRCLE_TOL: f64 = 1e-8;
pub const MIN_GRID: usize = 8;

/// `θᵢ = −π + (i+1)·2π/m`, `i = 0..m`: uniform, strictly increasing, ends at π.
pub fn uniform_grid(m: usize) -> Vec<f64> {
    let step = 2.0 * PI / m as f64;
    (0..m).map(|i| -PI + (i + 1) as f64 * step).collect()
}

pub(crate) fn check_grid(m: usize) -> Result<()> {
    if m < MIN_GRID {
        Err(Error::GridTooSmall(m))
    } else {
        Ok(())
    }
}

/// Spectrum of `Re(e^{−iθ}A)`.
pub fn eigen_at(a: &ComplexMatrix, theta: f64) -> Result<HermitianEigen> {
    hermitian_eigen(&a.rotate(theta).re_part(), DEFAULT_TOL)
}

pub(crate) fn top_eigenvalue(a: &ComplexMatrix, theta: f64) -> Result<f64> {
    Ok(eigen_at(a, theta)?.values[0])
}

/// Ordered eigenvalues of `Re(e^{−iθ}A)` on a uniform θ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportSweep {
    pub thetas: Vec<f64>,
    /// `eigs[i][j] = λ_{j+1}(thetas[i])`, descending in `j`.
    pub eigs: Vec<Vec<f64>>,
    pub matrix_dim: usize,
}

impl SupportSweep {
    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    /// `λ₁` at every grid angle.
    pub fn support(&self) -> Vec<f64> {
        self.eigs.iter().map(|row| row[0]).collect()
    }

    /// `λ_k` (1-based) at every grid angle.
    pub fn level(&self, k: usize) -> Vec<f64> {
        self.eigs.iter().map(|row| row[k - 1]).collect()
    }
}

pub fn sweep(a: &ComplexMatrix, m: usize) -> Result<SupportSweep> {
    check_grid(m)?;
    let thetas = uniform_grid(m);
    let eigs = thetas
        .iter()
        .map(|&t| eigen_at(a, t).map(|e| e.values))
        .collect::<Result<Vec<_>>>()?;
    Ok(SupportSweep {
        thetas,
        eigs,
        matrix_dim: a.dim(),
    })
}

/// Samples of `∂W(A)` in θ order; `points[i]` is the support point in
/// direction `e^{i·thetas[i]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub thetas: Vec<f64>,
    pub points: Vec<Complex64>,
    pub closed: bool,
}

/// `⟨Ax, x⟩` for the top unit eigenvector `x` of `Re(e^{−iθ}A)` at each
/// grid angle.
pub fn boundary(a: &ComplexMatrix, m: usize) -> Result<BoundaryCurve> {
    check_grid(m)?;
    let thetas = uniform_grid(m);
    let points = thetas
        .iter()
        .map(|&t| eigen_at(a, t).map(|e| a.quadratic_form(&e.vectors[0])))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryCurve {
        thetas,
        points,
        closed: true,
    })
}

/// `max_θ λ₁(θ)`: grid maximum refined by golden-section search on the two
/// grid intervals adjacent to the grid argmax.
pub fn numerical_radius(a: &ComplexMatrix, m: usize) -> Result<f64> {
    let sw = sweep(a, m)?;
    let support = sw.support();
    let (imax, &best) = support
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .expect("grid is nonempty");
    let step = 2.0 * PI / m as f64;
    let centre = sw.thetas[imax];
    let mut failure = None;
    let (_, neg) = golden_min(
        |t| match top_eigenvalue(a, t) {
            Ok(v) => -v,
            Err(e) => {
                failure = Some(e);
                f64::INFINITY
            }
        },
        centre - step,
        centre + step,
        1e-10,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(best.max(-neg))
}

/// `P_{A,θ}`: the (monic) characteristic polynomial of `Re(e^{−iθ}A)`.
pub fn kippenhahn_coeffs(a: &ComplexMatrix, theta: f64) -> Result<RealPolynomial> {
    char_poly_with_tol(&a.rotate(theta).re_part(), DEFAULT_TOL)
}

/// Radii of origin-centred circles contained in the Kippenhahn curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSet {
    /// Ascending; may start with `0` when zero is a persistent root.
    pub radii: Vec<f64>,
}

impl CircleSet {
    pub fn nonzero(&self, eps: f64) -> Vec<f64> {
        self.radii.iter().copied().filter(|&r| r > eps).collect()
    }
}

/// Candidates are `|λ|` for the eigenvalues of `Re A`; a candidate `r` is
/// kept when `|P_{A,θ}(±r)| ≤ tol·(1 + ‖A‖_F)ⁿ` over the whole grid.
pub fn detect_circles(a: &ComplexMatrix, m: usize, tol: f64) -> Result<CircleSet> {
    check_grid(m)?;
    let coarse = detect_circles_once(a, m, tol)?;
    let fine = detect_circles_once(a, 2 * m, tol)?;
    if coarse.radii.len() != fine.radii.len() {
        return Err(Error::GridUnstable {
            coarse: m,
            fine: 2 * m,
        });
    }
    Ok(coarse)
}

fn detect_circles_once(a: &ComplexMatrix, m: usize, tol: f64) -> Result<CircleSet> {
    let n = a.dim();
    let norm = a.frobenius_norm();
    let threshold = tol * (1.0 + norm).powi(n as i32);
    let dedup_eps = 1e-9 * (1.0 + norm);

    let mut candidates: Vec<f64> = eigen_at(a, 0.0)?.values.iter().map(|v| v.abs()).collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup_by(|x, y| (*x - *y).abs() <= dedup_eps);

    let polys = uniform_grid(m)
        .iter()
        .map(|&t| kippenhahn_coeffs(a, t))
        .collect::<Result<Vec<_>>>()?;
    let radii = candidates
        .into_iter()
        .filter(|&r| {
            polys
                .iter()
                .all(|p| p.eval(r).abs() <= threshold && p.eval(-r).abs() <= threshold)
        })
        .collect();
    Ok(CircleSet { radii })
}

/// `Some(r)` when `λ₁` is constant to within `tol` on the grid, i.e. `W(A)`
/// is the disk of radius `r` about the origin.
pub fn circular_disk_test(a: &ComplexMatrix, m: usize, tol: f64) -> Result<Option<f64>> {
    check_grid(m)?;
    let coarse = circular_disk_once(a, m, tol)?;
    let fine = circular_disk_once(a, 2 * m, tol)?;
    if coarse.is_some() != fine.is_some() {
        return Err(Error::GridUnstable {
            coarse: m,
            fine: 2 * m,
        });
    }
    Ok(coarse)
}

fn circular_disk_once(a: &ComplexMatrix, m: usize, tol: f64) -> Result<Option<f64>> {
    let support = sweep(a, m)?.support();
    let lo = support.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = support.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi - lo <= tol {
        Ok(Some(support.iter().sum::<f64>() / support.len() as f64))
    } else {
        Ok(None)
    }
}
