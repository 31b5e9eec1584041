//! Numerical ranges of small dense matrices, with a focus on low-dimensional
//! partial isometries.
//!
//! The crate is `no_std` (it needs `alloc`) and holds only numerical code.
//! IO lives in the `numrange` crate.
//!
//! * [`matcore`]: complex matrices and the Jacobi eigensolver.
//! * [`pisom`]: the canonical partial-isometry families.
//! * [`kipp`]: support-function sweeps and everything derived from them.
//! * [`analysis`]: verdicts about the shape of `W(A)`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
mod error;
pub mod kipp;
pub mod matcore;
mod optimize;
pub mod pisom;

pub use error::{Error, Result};
pub use matcore::{ComplexMatrix, HermitianEigen, RealPolynomial};
pub use num_complex::Complex64;

/// Tolerance used wherever a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-10;
