//! Unitary reducibility through the commutant of `{A, A*}`.
//!
//! `A` is unitarily reducible iff some non-scalar Hermitian `X` satisfies
//! `XA = AX` and `XA* = A*X`. The Hermitian solutions form a real vector space
//! containing the identity; its dimension is read off as the numerical nullity
//! of the real-linear map `X ↦ (XA − AX, XA* − A*X)`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::matcore::svd::one_sided_jacobi;
use crate::matcore::{jacobi, ComplexMatrix};
use crate::{Error, Result};

/// Singular values below this fraction of the largest count as zero.
pub const COMMUTANT_REL_TOL: f64 = 1e-8;
const MAX_REDUCIBILITY_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct ReducibilityReport {
    pub reducible: bool,
    /// Real dimension of the Hermitian part of the commutant (≥ 1).
    pub commutant_dim: usize,
    /// Orthogonal projection onto a nontrivial reducing subspace.
    pub projector: Option<ComplexMatrix>,
    /// `‖PA − AP‖_F` for the projector.
    pub witness_defect: Option<f64>,
}

/// Real basis of the `n × n` Hermitian matrices: `E_kk`, then
/// `E_kl + E_lk` and `i(E_kl − E_lk)` for `k < l`.
fn hermitian_basis(n: usize) -> Vec<ComplexMatrix> {
    let mut basis = Vec::with_capacity(n * n);
    for k in 0..n {
        let mut e = ComplexMatrix::zeros(n);
        e[(k, k)] = Complex64::new(1.0, 0.0);
        basis.push(e);
    }
    for k in 0..n {
        for l in k + 1..n {
            let mut e = ComplexMatrix::zeros(n);
            e[(k, l)] = Complex64::new(1.0, 0.0);
            e[(l, k)] = Complex64::new(1.0, 0.0);
            basis.push(e);
            let mut f = ComplexMatrix::zeros(n);
            f[(k, l)] = Complex64::new(0.0, 1.0);
            f[(l, k)] = Complex64::new(0.0, -1.0);
            basis.push(f);
        }
    }
    basis
}

fn commutator_residual(x: &ComplexMatrix, a: &ComplexMatrix, a_star: &ComplexMatrix) -> Vec<f64> {
    let r1 = &x.matmul(a) - &a.matmul(x);
    let r2 = &x.matmul(a_star) - &a_star.matmul(x);
    r1.entries()
        .iter()
        .chain(r2.entries())
        .flat_map(|z| [z.re, z.im])
        .collect()
}

/// `rel_tol` is the singular-value threshold relative to the largest
/// singular value.
pub fn reducibility(a: &ComplexMatrix, rel_tol: f64) -> Result<ReducibilityReport> {
    let n = a.dim();
    if n > MAX_REDUCIBILITY_DIM {
        return Err(Error::UnsupportedDimension(n));
    }
    let a_star = a.adjoint();
    let basis = hermitian_basis(n);
    let columns: Vec<Vec<f64>> = basis
        .iter()
        .map(|x| commutator_residual(x, a, &a_star))
        .collect();
    let svd = one_sided_jacobi(columns)?;
    let null = svd.null_space(rel_tol);
    let commutant_dim = null.len();

    if commutant_dim < 2 {
        return Ok(ReducibilityReport {
            reducible: false,
            commutant_dim,
            projector: None,
            witness_defect: None,
        });
    }

    // Remove the identity direction (ones on the first n coordinates) and
    // keep the largest remainder.
    let strip = |v: &Vec<f64>| -> Vec<f64> {
        let mean = v[..n].iter().sum::<f64>() / n as f64;
        v.iter()
            .enumerate()
            .map(|(i, &x)| if i < n { x - mean } else { x })
            .collect()
    };
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let coords = null
        .iter()
        .map(strip)
        .max_by(|u, v| norm(u).total_cmp(&norm(v)))
        .expect("nullity is at least two");

    let mut x = ComplexMatrix::zeros(n);
    for (coef, e) in coords.iter().zip(&basis) {
        x = &x + &e.scale(Complex64::new(*coef, 0.0));
    }
    let eig = jacobi(&x)?;
    // split the spectrum of X at its widest gap
    let split = eig
        .values
        .windows(2)
        .enumerate()
        .max_by(|p, q| (p.1[0] - p.1[1]).total_cmp(&(q.1[0] - q.1[1])))
        .map(|(i, _)| i)
        .expect("n ≥ 2 when nullity ≥ 2");
    let mut p = ComplexMatrix::zeros(n);
    for v in &eig.vectors[..=split] {
        for i in 0..n {
            for j in 0..n {
                p[(i, j)] += v[i] * v[j].conj();
            }
        }
    }
    let defect = (&p.matmul(a) - &a.matmul(&p)).frobenius_norm();
    Ok(ReducibilityReport {
        reducible: true,
        commutant_dim,
        projector: Some(p),
        witness_defect: Some(defect),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pisom::{build, NilpotentDim5};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn diagonal_matrix() {
        let a = ComplexMatrix::from_diagonal(&[c(1.0), c(2.0)]);
        let r = reducibility(&a, COMMUTANT_REL_TOL).unwrap();
        assert!(r.reducible);
        assert_eq!(r.commutant_dim, 2);
        let p = r.projector.unwrap();
        assert!((p.trace().re - 1.0).abs() < 1e-12);
        assert!(r.witness_defect.unwrap() < 1e-12);
    }

    #[test]
    fn jordan_block_is_irreducible() {
        let a = ComplexMatrix::from_real_rows(&[[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]])
            .unwrap();
        let r = reducibility(&a, COMMUTANT_REL_TOL).unwrap();
        assert!(!r.reducible);
        assert_eq!(r.commutant_dim, 1);
        assert!(r.projector.is_none());
    }

    #[test]
    fn case_one_and_two_of_the_five_by_five_family() {
        let irreducible = [(0.0, 0.4), (0.4, 0.0)];
        let reducible = [
            (1.0, 0.4),
            (0.4, 1.0),
            (0.0, 0.0),
            (0.0, 1.0),
            (1.0, 0.0),
            (1.0, 1.0),
        ];
        for (b, t) in irreducible {
            let a = build(&NilpotentDim5::new(b, t).unwrap().into());
            let r = reducibility(&a, COMMUTANT_REL_TOL).unwrap();
            assert!(!r.reducible, "b={b} t={t}");
        }
        for (b, t) in reducible {
            let a = build(&NilpotentDim5::new(b, t).unwrap().into());
            let r = reducibility(&a, COMMUTANT_REL_TOL).unwrap();
            assert!(r.reducible, "b={b} t={t}");
            let p = r.projector.unwrap();
            let rank = p.trace().re.round() as usize;
            assert!(rank > 0 && rank < 5);
            assert!((&p.matmul(&p) - &p).frobenius_norm() < 1e-10);
            assert!(r.witness_defect.unwrap() < 1e-8);
        }
    }

    #[test]
    fn scalar_matrix_is_reducible() {
        let r = reducibility(&ComplexMatrix::identity(3), COMMUTANT_REL_TOL).unwrap();
        assert!(r.reducible);
        assert_eq!(r.commutant_dim, 9);
    }

    #[test]
    fn one_by_one_is_irreducible() {
        let r = reducibility(&ComplexMatrix::identity(1), COMMUTANT_REL_TOL).unwrap();
        assert!(!r.reducible);
        assert_eq!(r.commutant_dim, 1);
    }
}
