//! Dense complex matrices and the small Hermitian eigensolver everything else
//! is built on.

mod eigen;
mod matrix;
mod poly;
pub mod svd;

pub(crate) use eigen::jacobi;
pub use eigen::{hermitian_eigen, HermitianEigen, MAX_DIM, MAX_SWEEPS, OFFDIAG_THRESHOLD};
pub use matrix::{vec_dot, vec_norm, ComplexMatrix};
pub use poly::{char_poly, char_poly_with_tol, RealPolynomial};

/// `(A + A*) / 2`.
pub fn re_part(a: &ComplexMatrix) -> ComplexMatrix {
    a.re_part()
}

/// `i (A* − A) / 2`.
pub fn im_part(a: &ComplexMatrix) -> ComplexMatrix {
    a.im_part()
}

/// `e^{−iθ} A`.
pub fn rotate(a: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    a.rotate(theta)
}
