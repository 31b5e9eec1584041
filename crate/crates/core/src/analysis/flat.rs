use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::genericity::refined_gap_minima;
use crate::kipp::{check_grid, eigen_at, sweep};
use crate::matcore::{hermitian_eigen, ComplexMatrix};
use crate::optimize::reduce_angle;
use crate::{Error, Result, DEFAULT_TOL};

/// A line segment on `∂W(A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatPortion {
    /// Outer normal direction φ of the supporting line.
    pub direction: f64,
    pub endpoints: [Complex64; 2],
    /// The repeated extreme eigenvalue of `Re(e^{−iφ}A)`.
    pub support_value: f64,
    /// Dimension of the top eigenspace; 2 in every case seen so far, larger
    /// values are compressed the same way.
    pub eigenspace_dim: usize,
}

impl FlatPortion {
    pub fn length(&self) -> f64 {
        (self.endpoints[0] - self.endpoints[1]).norm()
    }
}

/// Flat portions of `∂W(A)`: wherever `λ₁` and `λ₂` collide (within `tol`)
/// the compression of `Im(e^{−iθ}A)` to the top eigenspace is diagonalised
/// and its extreme eigenvalues `μ₁ > μ₂` give the endpoints
/// `e^{iθ}(λ₁ + iμ)`.
pub fn flat_portions(a: &ComplexMatrix, m: usize, tol: f64) -> Result<Vec<FlatPortion>> {
    check_grid(m)?;
    let coarse = flat_portions_once(a, m, tol)?;
    let fine = flat_portions_once(a, 2 * m, tol)?;
    if coarse.len() != fine.len() {
        return Err(Error::GridUnstable {
            coarse: m,
            fine: 2 * m,
        });
    }
    Ok(coarse)
}

fn flat_portions_once(a: &ComplexMatrix, m: usize, tol: f64) -> Result<Vec<FlatPortion>> {
    if a.dim() < 2 {
        return Ok(Vec::new());
    }
    let sw = sweep(a, m)?;
    let minima = refined_gap_minima(a, &sw, &[1])?;
    let mut directions: Vec<f64> = Vec::new();
    for g in minima.iter().filter(|g| g.gap <= tol) {
        let seen = directions.iter().any(|&d| {
            let diff = reduce_angle(d - g.theta);
            diff.min(2.0 * PI - diff) < 1e-6
        });
        if !seen {
            directions.push(g.theta);
        }
    }
    directions.sort_by(f64::total_cmp);

    let mut out = Vec::new();
    for theta in directions {
        if let Some(p) = portion_at(a, theta, tol)? {
            out.push(p);
        }
    }
    Ok(out)
}

fn portion_at(a: &ComplexMatrix, theta: f64, tol: f64) -> Result<Option<FlatPortion>> {
    let e = eigen_at(a, theta)?;
    let top = e.values[0];
    let cluster: Vec<usize> = (0..e.dim()).filter(|&j| top - e.values[j] <= tol).collect();
    if cluster.len() < 2 {
        return Ok(None);
    }
    let support_value = cluster.iter().map(|&j| e.values[j]).sum::<f64>() / cluster.len() as f64;
    let basis: Vec<Vec<Complex64>> = cluster.iter().map(|&j| e.vectors[j].clone()).collect();
    let im = a.rotate(theta).im_part();
    let compressed = im.compress(&basis);
    let mu = hermitian_eigen(&compressed, DEFAULT_TOL.max(1e-8))?;
    let (mu_hi, mu_lo) = (mu.values[0], mu.values[mu.dim() - 1]);
    if mu_hi - mu_lo <= tol {
        return Ok(None);
    }
    let w = Complex64::from_polar(1.0, theta);
    Ok(Some(FlatPortion {
        direction: theta,
        endpoints: [
            w * Complex64::new(support_value, mu_hi),
            w * Complex64::new(support_value, mu_lo),
        ],
        support_value,
        eigenspace_dim: cluster.len(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::DEFAULT_GAP_TOL;
    use crate::pisom::{build, ExceptionalDim5, Sign};

    #[test]
    fn exceptional_plus_has_one_segment() {
        let a = build(&ExceptionalDim5::new(Sign::Plus, 0.0).unwrap().into());
        let fp = flat_portions(&a, 720, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(fp.len(), 1);
        let p = &fp[0];
        assert!(p.direction.abs() < 1e-8);
        assert!((p.endpoints[0] - Complex64::new(0.62349, 0.08077)).norm() < 1e-3);
        assert!((p.endpoints[1] - Complex64::new(0.62349, -0.08077)).norm() < 1e-3);
        assert_eq!(p.eigenspace_dim, 2);
    }

    #[test]
    fn exceptional_minus_has_none() {
        let a = build(&ExceptionalDim5::new(Sign::Minus, 0.0).unwrap().into());
        assert!(flat_portions(&a, 720, DEFAULT_GAP_TOL).unwrap().is_empty());
    }

    #[test]
    fn jordan_block_has_none() {
        let a = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(flat_portions(&a, 64, DEFAULT_GAP_TOL).unwrap().is_empty());
    }

    #[test]
    fn normal_matrix_has_segment_boundary() {
        // W(diag(1, i, −1)) is a triangle; each side is a flat portion.
        let a = ComplexMatrix::from_diagonal(&[
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
        ]);
        let fp = flat_portions(&a, 720, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(fp.len(), 3);
    }
}
