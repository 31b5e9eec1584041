use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use super::ComplexMatrix;
use crate::{Error, Result};

/// Sweep budget for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 50;
/// Convergence threshold on `‖offdiag(H)‖_F / ‖H‖_F`.
pub const OFFDIAG_THRESHOLD: f64 = 1e-13;
/// Largest dimension accepted by [`hermitian_eigen`].
pub const MAX_DIM: usize = 64;

/// Eigenvalues sorted descending together with orthonormal eigenvectors.
///
/// `vectors[j]` pairs with `values[j]`. Each vector is scaled so that its
/// first significant component is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Largest eigenvalue together with its eigenvector.
    pub fn top(&self) -> (f64, &[Complex64]) {
        (self.values[0], &self.vectors[0])
    }
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// Fails with [`Error::NotHermitian`] when `‖H − H*‖_F > tol·‖H‖_F`.
pub fn hermitian_eigen(h: &ComplexMatrix, tol: f64) -> Result<HermitianEigen> {
    if h.dim() > MAX_DIM {
        return Err(Error::UnsupportedDimension(h.dim()));
    }
    check_hermitian(h, tol)?;
    jacobi(h)
}

pub(crate) fn check_hermitian(h: &ComplexMatrix, tol: f64) -> Result<()> {
    let defect = h.hermitian_defect();
    let allowed = tol * h.frobenius_norm();
    if defect > allowed {
        return Err(Error::NotHermitian { defect, allowed });
    }
    Ok(())
}

/// Jacobi iteration without the dimension cap or the Hermitian check; the
/// strictly lower triangle is ignored in favour of the upper one.
pub(crate) fn jacobi(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = h.dim();
    let mut a = h.clone();
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            a[(j, i)] = a[(i, j)].conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();
    let threshold = OFFDIAG_THRESHOLD * scale;

    let mut converged = n == 1 || scale == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged || off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate_pair(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let values: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let vectors: Vec<Vec<Complex64>> = (0..n).map(|j| normalize_phase(v.column(j))).collect();
    Ok(sort_descending(values, vectors, scale))
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Annihilates `a[p][q]` with `G = D·R`, where `D` removes the phase of
/// `a[p][q]` and `R` is a real Givens rotation.
fn rotate_pair(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let h = a[(p, q)];
    let g = h.norm();
    if g == 0.0 {
        return;
    }
    let phase = h / g;
    let phase_conj = phase.conj();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let zeta = (aqq - app) / (2.0 * g);
    let t = if zeta.abs() > 1e150 {
        0.5 / zeta
    } else {
        let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
        sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // columns: X ← X G
    for k in 0..n {
        let xp = a[(k, p)];
        let xq = a[(k, q)];
        a[(k, p)] = xp * c - xq * phase_conj * s;
        a[(k, q)] = xp * s + xq * phase_conj * c;
        let vp = v[(k, p)];
        let vq = v[(k, q)];
        v[(k, p)] = vp * c - vq * phase_conj * s;
        v[(k, q)] = vp * s + vq * phase_conj * c;
    }
    // rows: X ← G* X
    for k in 0..n {
        let xp = a[(p, k)];
        let xq = a[(q, k)];
        a[(p, k)] = xp * c - xq * phase * s;
        a[(q, k)] = xp * s + xq * phase * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

const SIGNIFICANT: f64 = 1e-8;

fn first_significant(v: &[Complex64]) -> usize {
    v.iter()
        .position(|z| z.norm() > SIGNIFICANT)
        .unwrap_or(v.len())
}

fn normalize_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    if let Some(z) = v.get(first_significant(&v)).copied() {
        let u = z.conj() / z.norm();
        for x in v.iter_mut() {
            *x *= u;
        }
    }
    v
}

/// Descending order; eigenvalues within `1e-12·‖H‖` of each other form a
/// tie cluster, ordered by the first significant eigenvector component.
fn sort_descending(values: Vec<f64>, vectors: Vec<Vec<Complex64>>, scale: f64) -> HermitianEigen {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));

    let tie = 1e-12 * scale.max(f64::MIN_POSITIVE);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[order[end - 1]] - values[order[end]] <= tie {
            end += 1;
        }
        order[start..end].sort_by_key(|&i| first_significant(&vectors[i]));
        start = end;
    }

    let mut sorted_values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    // Keep the value list monotone after reordering inside clusters.
    sorted_values.sort_by(|a, b| b.total_cmp(a));
    let mut out_vectors = vec![Vec::new(); n];
    for (slot, &i) in order.iter().enumerate() {
        out_vectors[slot] = vectors[i].clone();
    }
    HermitianEigen {
        values: sorted_values,
        vectors: out_vectors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{vec_dot, vec_norm};

    fn residual(h: &ComplexMatrix, e: &HermitianEigen) -> f64 {
        e.values
            .iter()
            .zip(&e.vectors)
            .map(|(&l, v)| {
                let hv = h.mul_vec(v);
                let r: Vec<Complex64> = hv.iter().zip(v).map(|(a, b)| a - b * l).collect();
                vec_norm(&r)
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn identity_has_unit_eigenvalues() {
        let e = hermitian_eigen(&ComplexMatrix::identity(3), 1e-10).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0, 1.0]);
        // tie-break by first significant component keeps the standard basis order
        for (j, v) in e.vectors.iter().enumerate() {
            assert_eq!(first_significant(v), j);
        }
    }

    #[test]
    fn jordan_block_real_part() {
        let h = ComplexMatrix::from_real_rows(&[[0.0, 0.5], [0.5, 0.0]]).unwrap();
        let e = hermitian_eigen(&h, 1e-10).unwrap();
        assert!((e.values[0] - 0.5).abs() < 1e-15);
        assert!((e.values[1] + 0.5).abs() < 1e-15);
        assert!(residual(&h, &e) < 1e-14);
    }

    #[test]
    fn path_graph_four_by_four() {
        // Re of the 4×4 nilpotent form at b = 0: weighted path e1–e3–e4–e2 with
        // weights 1/2 and 1/2 and an isolated edge of weight 0.
        let mut a = ComplexMatrix::zeros(4);
        a[(0, 2)] = Complex64::new(1.0, 0.0);
        a[(2, 3)] = Complex64::new(1.0, 0.0);
        let h = a.re_part();
        let e = hermitian_eigen(&h, 1e-10).unwrap();
        let r = core::f64::consts::FRAC_1_SQRT_2;
        let expected = [r, 0.0, 0.0, -r];
        for (got, want) in e.values.iter().zip(expected) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn complex_hermitian_residual_and_orthonormality() {
        let h = ComplexMatrix::from_rows(&[
            [
                Complex64::new(2.0, 0.0),
                Complex64::new(1.0, -1.0),
                Complex64::new(0.0, 0.5),
            ],
            [
                Complex64::new(1.0, 1.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.3, 0.0),
            ],
            [
                Complex64::new(0.0, -0.5),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.5, 0.0),
            ],
        ])
        .unwrap();
        let e = hermitian_eigen(&h, 1e-10).unwrap();
        assert!(residual(&h, &e) < 1e-12);
        for i in 0..3 {
            for j in 0..3 {
                let d = vec_dot(&e.vectors[i], &e.vectors[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((d - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(matches!(
            hermitian_eigen(&a, 1e-10),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn zero_matrix() {
        let e = hermitian_eigen(&ComplexMatrix::zeros(4), 1e-10).unwrap();
        assert!(e.values.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn rejects_oversized_input() {
        let h = ComplexMatrix::identity(MAX_DIM + 1);
        assert!(matches!(
            hermitian_eigen(&h, 1e-10),
            Err(Error::UnsupportedDimension(65))
        ));
    }
}
