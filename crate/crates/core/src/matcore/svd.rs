use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::{Error, Result};

const MAX_SVD_SWEEPS: usize = 60;

/// Singular values and right singular vectors of a real `rows × cols`
/// matrix, by one-sided (Hestenes) Jacobi orthogonalisation.
#[derive(Debug, Clone)]
pub struct RealSvd {
    /// Unsorted; `singular_values[j]` pairs with `right_vectors[j]`.
    pub singular_values: Vec<f64>,
    pub right_vectors: Vec<Vec<f64>>,
}

impl RealSvd {
    pub fn max_singular_value(&self) -> f64 {
        self.singular_values.iter().copied().fold(0.0, f64::max)
    }

    /// Right singular vectors whose singular value is at most
    /// `rel_tol · σ_max`.
    pub fn null_space(&self, rel_tol: f64) -> Vec<Vec<f64>> {
        let cutoff = rel_tol * self.max_singular_value();
        self.singular_values
            .iter()
            .zip(&self.right_vectors)
            .filter(|(&s, _)| s <= cutoff)
            .map(|(_, v)| v.clone())
            .collect()
    }
}

/// `columns[j]` is the j-th column of the matrix.
pub fn one_sided_jacobi(mut columns: Vec<Vec<f64>>) -> Result<RealSvd> {
    let cols = columns.len();
    let mut v: Vec<Vec<f64>> = (0..cols)
        .map(|j| {
            let mut e = vec![0.0; cols];
            e[j] = 1.0;
            e
        })
        .collect();

    // Columns with squared norm below this are numerically zero and never
    // rotated; otherwise rounding noise among them can cycle forever.
    let total: f64 = columns.iter().map(|c| dot(c, c)).sum();
    let negligible = (f64::EPSILON * f64::EPSILON) * total;

    let mut converged = false;
    for _ in 0..MAX_SVD_SWEEPS {
        let mut rotated = false;
        for i in 0..cols {
            for j in i + 1..cols {
                let alpha = dot(&columns[i], &columns[i]);
                let beta = dot(&columns[j], &columns[j]);
                let gamma = dot(&columns[i], &columns[j]);
                if alpha <= negligible
                    || beta <= negligible
                    || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt()
                {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta.abs() > 1e150 {
                    0.5 / zeta
                } else {
                    let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = columns.split_at_mut(j);
                rotate(&mut lo[i], &mut hi[0], c, s);
                let (lo, hi) = v.split_at_mut(j);
                rotate(&mut lo[i], &mut hi[0], c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: MAX_SVD_SWEEPS,
        });
    }
    let singular_values = columns.iter().map(|c| dot(c, c).sqrt()).collect();
    Ok(RealSvd {
        singular_values,
        right_vectors: v,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rotate(a: &mut [f64], b: &mut [f64], c: f64, s: f64) {
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        let (xi, yi) = (*x, *y);
        *x = c * xi - s * yi;
        *y = s * xi + c * yi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_matrix() {
        // [[1,2],[2,4],[3,6]] has singular values √70 and 0.
        let cols = vec![vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0]];
        let svd = one_sided_jacobi(cols).unwrap();
        let mut s = svd.singular_values.clone();
        s.sort_by(|a, b| b.total_cmp(a));
        assert!((s[0] - 70f64.sqrt()).abs() < 1e-12);
        assert!(s[1] < 1e-12);
        let null = svd.null_space(1e-8);
        assert_eq!(null.len(), 1);
        let n = &null[0];
        // null vector ∝ (2, −1)
        assert!((n[0] + 2.0 * n[1]).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_columns_are_untouched() {
        let cols = vec![vec![3.0, 0.0], vec![0.0, 4.0]];
        let svd = one_sided_jacobi(cols).unwrap();
        assert_eq!(svd.singular_values, vec![3.0, 4.0]);
        assert!(svd.null_space(1e-8).is_empty());
    }
}
