use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::eigen::check_hermitian;
use super::ComplexMatrix;
use crate::{Result, DEFAULT_TOL};

/// Real polynomial with coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Trailing zero coefficients are dropped so that the leading
    /// coefficient is nonzero (the zero polynomial keeps a single `0`).
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![0.0]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        let lead = self.leading();
        if lead == 0.0 {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / lead).collect())
    }

    /// Monic polynomial with the given real roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut coeffs = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }
}

/// `det(λI − H)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(h: &ComplexMatrix) -> Result<RealPolynomial> {
    char_poly_with_tol(h, DEFAULT_TOL)
}

pub fn char_poly_with_tol(h: &ComplexMatrix, tol: f64) -> Result<RealPolynomial> {
    check_hermitian(h, tol)?;
    let n = h.dim();
    // coeffs[k] multiplies λ^k
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = ComplexMatrix::zeros(n);
    for k in 1..=n {
        // M_k = H M_{k-1} + c_{n-k+1} I
        m = h.matmul(&m).shift(Complex64::new(coeffs[n - k + 1], 0.0));
        let hm = h.matmul(&m);
        coeffs[n - k] = -hm.trace().re / k as f64;
    }
    Ok(RealPolynomial::new(coeffs))
}
