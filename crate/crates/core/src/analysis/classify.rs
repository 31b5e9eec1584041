use num_complex::Complex64;

use super::flat::flat_portions;
use super::genericity::DEFAULT_GAP_TOL;
use crate::kipp::DEFAULT_GRID;
use crate::matcore::ComplexMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ShapeVerdict {
    EllipticalDisk {
        foci: [Complex64; 2],
    },
    Ovular,
    FlatPortion,
    /// Reserved for normal triangular input; [`classify_3x3`] rejects such
    /// input with [`Error::ReducibleInput`] instead.
    LineSegment,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification3x3 {
    pub verdict: ShapeVerdict,
    pub lambda_star: Complex64,
    /// Whether the necessary condition for a flat portion held (only
    /// evaluated when `xyz ≠ 0`).
    pub flat_condition: Option<bool>,
}

/// `(c|x|² + b|y|² + a|z|² − x·ȳ·z) / (|x|² + |y|² + |z|²)` for the upper
/// triangular matrix `[[a, x, y], [0, b, z], [0, 0, c]]`.
pub fn lambda_star(m: &ComplexMatrix) -> Complex64 {
    let (a, b, c) = (m[(0, 0)], m[(1, 1)], m[(2, 2)]);
    let (x, y, z) = (m[(0, 1)], m[(0, 2)], m[(1, 2)]);
    let (nx, ny, nz) = (x.norm_sqr(), y.norm_sqr(), z.norm_sqr());
    (c * nx + b * ny + a * nz - x * y.conj() * z) / (nx + ny + nz)
}

/// Shape of `W(A)` for an upper triangular, unitarily irreducible 3×3 matrix.
///
/// Elliptical exactly when `λ*` equals a diagonal entry; the foci are then the
/// other two diagonal entries. Otherwise a flat portion requires `xyz ≠ 0` and
/// `|xy/z| − 2Re(e^{−iθ₀}a) = |xz/y| − 2Re(e^{−iθ₀}b)` with `θ₀ = arg(x·ȳ·z)`;
/// when that holds the verdict is confirmed with [`flat_portions`].
pub fn classify_3x3(m: &ComplexMatrix, tol: f64) -> Result<Classification3x3> {
    if m.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: m.dim(),
        });
    }
    if [(1, 0), (2, 0), (2, 1)]
        .iter()
        .any(|&ij| m[ij].norm() > tol)
    {
        return Err(Error::NotTriangular);
    }
    let (x, y, z) = (m[(0, 1)], m[(0, 2)], m[(1, 2)]);
    if x.norm() <= tol && y.norm() <= tol && z.norm() <= tol {
        return Err(Error::ReducibleInput);
    }
    let diag = [m[(0, 0)], m[(1, 1)], m[(2, 2)]];
    let lambda = lambda_star(m);

    if let Some(hit) = diag.iter().position(|d| (lambda - d).norm() <= tol) {
        let others: [Complex64; 2] = match hit {
            0 => [diag[1], diag[2]],
            1 => [diag[0], diag[2]],
            _ => [diag[0], diag[1]],
        };
        return Ok(Classification3x3 {
            verdict: ShapeVerdict::EllipticalDisk { foci: others },
            lambda_star: lambda,
            flat_condition: None,
        });
    }

    let xyz_nonzero = x.norm() > tol && y.norm() > tol && z.norm() > tol;
    let flat_condition = xyz_nonzero.then(|| {
        let w = Complex64::from_polar(1.0, -(x * y.conj() * z).arg());
        let lhs = (x * y / z).norm() - 2.0 * (w * diag[0]).re;
        let rhs = (x * z / y).norm() - 2.0 * (w * diag[1]).re;
        (lhs - rhs).abs() <= tol * (1.0 + lhs.abs().max(rhs.abs()))
    });

    let verdict = if flat_condition == Some(true)
        && !flat_portions(m, DEFAULT_GRID, DEFAULT_GAP_TOL)?.is_empty()
    {
        ShapeVerdict::FlatPortion
    } else {
        ShapeVerdict::Ovular
    };
    Ok(Classification3x3 {
        verdict,
        lambda_star: lambda,
        flat_condition,
    })
}
