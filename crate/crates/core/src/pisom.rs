//! Canonical families of partial isometries.
//!
//! A matrix `A` is a partial isometry when `A A* A = A`. Up to a block
//! diagonal unitary similarity every such matrix with a nontrivial kernel has
//! the shape `[[0, B], [0, C]]` with `B*B + C*C = I`; the families below are
//! particular normal forms of that shape in dimensions 3, 4 and 5.
//!
//! Parameters are validated once, when a spec is constructed, and derived
//! quantities (`c = √(1−b²)`, `s = √(1−t²)`) are stored so that every
//! downstream formula reads the same numbers.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::matcore::{vec_dot, vec_norm, ComplexMatrix};
use crate::optimize::reduce_angle;
use crate::{Error, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check_unit_interval(name: &str, x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidSpec(format!(
            "{name} must lie in [0, 1], got {x}"
        )));
    }
    Ok(())
}

/// Rank-two partial isometry in dimension 3 with eigenvalues `0, λ₁, λ₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rank2Dim3 {
    lambda1: Complex64,
    lambda2: Complex64,
}

impl Rank2Dim3 {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // the negation also rejects NaN
    pub fn new(lambda1: Complex64, lambda2: Complex64) -> Result<Self> {
        for (name, z) in [("lambda1", lambda1), ("lambda2", lambda2)] {
            if !(z.norm() < 1.0) {
                return Err(Error::InvalidSpec(format!(
                    "|{name}| must be < 1, got {}",
                    z.norm()
                )));
            }
        }
        Ok(Self { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> Complex64 {
        self.lambda1
    }

    pub fn lambda2(&self) -> Complex64 {
        self.lambda2
    }

    fn build(&self) -> ComplexMatrix {
        let (l1, l2) = (self.lambda1, self.lambda2);
        let r1 = (1.0 - l1.norm_sqr()).sqrt();
        let r2 = (1.0 - l2.norm_sqr()).sqrt();
        let mut a = ComplexMatrix::zeros(3);
        a[(0, 1)] = real(r1);
        a[(0, 2)] = -l1.conj() * r2;
        a[(1, 1)] = l1;
        a[(1, 2)] = real(r1 * r2);
        a[(2, 2)] = l2;
        a
    }
}

/// Nilpotent rank-two partial isometry in dimension 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NilpotentDim4 {
    b: f64,
    c: f64,
}

impl NilpotentDim4 {
    pub fn new(b: f64) -> Result<Self> {
        check_unit_interval("b", b)?;
        Ok(Self {
            b,
            c: (1.0 - b * b).sqrt(),
        })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    fn build(&self) -> ComplexMatrix {
        let mut a = ComplexMatrix::zeros(4);
        a[(0, 2)] = real(1.0);
        a[(1, 3)] = real(self.b);
        a[(2, 3)] = real(self.c);
        a
    }
}

/// Nilpotent rank-three partial isometry in dimension 5, parameterised by
/// `b, c, s, t ≥ 0` with `b² + c² = s² + t² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NilpotentDim5 {
    b: f64,
    c: f64,
    s: f64,
    t: f64,
}

impl NilpotentDim5 {
    pub fn new(b: f64, t: f64) -> Result<Self> {
        check_unit_interval("b", b)?;
        check_unit_interval("t", t)?;
        Ok(Self {
            b,
            c: (1.0 - b * b).sqrt(),
            s: (1.0 - t * t).sqrt(),
            t,
        })
    }

    /// All four parameters given explicitly; they must satisfy the two
    /// normalisations to within `1e-12`.
    pub fn from_parts(b: f64, c: f64, s: f64, t: f64) -> Result<Self> {
        for (name, x) in [("b", b), ("c", c), ("s", s), ("t", t)] {
            check_unit_interval(name, x)?;
        }
        if (b * b + c * c - 1.0).abs() > 1e-12 || (s * s + t * t - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidSpec(
                "parameters must satisfy b² + c² = s² + t² = 1".to_string(),
            ));
        }
        Ok(Self { b, c, s, t })
    }

    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn s(&self) -> f64 {
        self.s
    }
    pub fn t(&self) -> f64 {
        self.t
    }

    /// `b·c·s·t` on the stored parameters.
    pub fn bcst(&self) -> f64 {
        self.b * self.c * self.s * self.t
    }

    fn build(&self) -> ComplexMatrix {
        let Self { b, c, s, t } = *self;
        let mut a = ComplexMatrix::zeros(5);
        a[(0, 2)] = real(1.0);
        a[(1, 3)] = real(b);
        a[(1, 4)] = real(t * c);
        a[(2, 3)] = real(c);
        a[(2, 4)] = real(-t * b);
        a[(3, 4)] = real(s);
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// One of the two non-generic nilpotent rank-three partial isometries in
/// dimension 5, times a unimodular factor `e^{iφ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExceptionalDim5 {
    sign: Sign,
    phi: f64,
}

impl ExceptionalDim5 {
    /// `phi` is any finite real; it is reduced into `[0, 2π)`.
    pub fn new(sign: Sign, phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::InvalidSpec(format!("phi must be finite, got {phi}")));
        }
        Ok(Self {
            sign,
            phi: reduce_angle(phi),
        })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The underlying real matrix (`φ = 0`) as a member of the 5×5 family.
    pub fn base(&self) -> NilpotentDim5 {
        let k = exceptional_constants();
        let (c, t) = match self.sign {
            Sign::Plus => (k.c_plus, k.t_plus),
            Sign::Minus => (k.c_minus, k.t_minus),
        };
        let sign = match self.sign {
            Sign::Plus => -1.0,
            Sign::Minus => 1.0,
        };
        // s² = (1 ∓ c) / (2 ∓ c)
        let s = ((1.0 + sign * c) / (2.0 + sign * c)).sqrt();
        NilpotentDim5 {
            b: (1.0 - c * c).sqrt(),
            c,
            s,
            t,
        }
    }

    fn build(&self) -> ComplexMatrix {
        self.base()
            .build()
            .scale(Complex64::from_polar(1.0, self.phi))
    }
}

/// Rectangular complex block, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RectBlock {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl RectBlock {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidSpec(format!(
                "block of shape {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }
}

/// Explicit `[[0, B], [0, C]]` layout; `B` is `k × m`, `C` is `m × m`.
#[derive(Debug, Clone, PartialEq)]
pub struct RawBlocks {
    b: RectBlock,
    c: ComplexMatrix,
}

impl RawBlocks {
    /// Checks `B*B + C*C = I` entrywise to within `tol`.
    pub fn new(b: RectBlock, c: ComplexMatrix, tol: f64) -> Result<Self> {
        let m = c.dim();
        if b.cols != m {
            return Err(Error::InvalidSpec(format!(
                "B has {} columns but C is {m}x{m}",
                b.cols
            )));
        }
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                let mut g = ZERO;
                for r in 0..b.rows {
                    g += b.get(r, i).conj() * b.get(r, j);
                }
                for r in 0..m {
                    g += c[(r, i)].conj() * c[(r, j)];
                }
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - real(want)).norm());
            }
        }
        if worst > tol {
            return Err(Error::InvalidSpec(format!(
                "B*B + C*C deviates from I by {worst:.3e}"
            )));
        }
        Ok(Self { b, c })
    }

    pub fn b(&self) -> &RectBlock {
        &self.b
    }

    pub fn c(&self) -> &ComplexMatrix {
        &self.c
    }

    fn build(&self) -> ComplexMatrix {
        let k = self.b.rows;
        let m = self.c.dim();
        let mut a = ComplexMatrix::zeros(k + m);
        for i in 0..k {
            for j in 0..m {
                a[(i, k + j)] = self.b.get(i, j);
            }
        }
        for i in 0..m {
            for j in 0..m {
                a[(k + i, k + j)] = self.c[(i, j)];
            }
        }
        a
    }
}

/// A member of one of the canonical families.
#[derive(Debug, Clone, PartialEq)]
pub enum PisomSpec {
    Rank2Dim3(Rank2Dim3),
    NilpotentDim4(NilpotentDim4),
    NilpotentDim5(NilpotentDim5),
    ExceptionalDim5(ExceptionalDim5),
    RawBlocks(RawBlocks),
}

impl PisomSpec {
    pub fn variant_name(&self) -> &'static str {
        match self {
            PisomSpec::Rank2Dim3(_) => "Rank2Dim3",
            PisomSpec::NilpotentDim4(_) => "NilpotentDim4",
            PisomSpec::NilpotentDim5(_) => "NilpotentDim5",
            PisomSpec::ExceptionalDim5(_) => "ExceptionalDim5",
            PisomSpec::RawBlocks(_) => "RawBlocks",
        }
    }
}

impl From<Rank2Dim3> for PisomSpec {
    fn from(s: Rank2Dim3) -> Self {
        PisomSpec::Rank2Dim3(s)
    }
}
impl From<NilpotentDim4> for PisomSpec {
    fn from(s: NilpotentDim4) -> Self {
        PisomSpec::NilpotentDim4(s)
    }
}
impl From<NilpotentDim5> for PisomSpec {
    fn from(s: NilpotentDim5) -> Self {
        PisomSpec::NilpotentDim5(s)
    }
}
impl From<ExceptionalDim5> for PisomSpec {
    fn from(s: ExceptionalDim5) -> Self {
        PisomSpec::ExceptionalDim5(s)
    }
}
impl From<RawBlocks> for PisomSpec {
    fn from(s: RawBlocks) -> Self {
        PisomSpec::RawBlocks(s)
    }
}

/// The matrix of the family member described by `spec`.
pub fn build(spec: &PisomSpec) -> ComplexMatrix {
    match spec {
        PisomSpec::Rank2Dim3(s) => s.build(),
        PisomSpec::NilpotentDim4(s) => s.build(),
        PisomSpec::NilpotentDim5(s) => s.build(),
        PisomSpec::ExceptionalDim5(s) => s.build(),
        PisomSpec::RawBlocks(s) => s.build(),
    }
}

/// `‖A A* A − A‖_F ≤ tol · (1 + ‖A‖_F)`.
pub fn validate_partial_isometry(a: &ComplexMatrix, tol: f64) -> bool {
    let aaa = a.matmul(&a.adjoint()).matmul(a);
    (&aaa - a).frobenius_norm() <= tol * (1.0 + a.frobenius_norm())
}

/// Spanning vector `[t, −s, 0, tc, −b]` of `ker Im(A)` for the 5×5 family.
pub fn kernel_vector_xi(spec: &NilpotentDim5) -> Vec<Complex64> {
    let NilpotentDim5 { b, c, s, t } = *spec;
    [t, -s, 0.0, t * c, -b].into_iter().map(real).collect()
}

/// Constants of the two exceptional 5×5 matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExceptionalConstants {
    pub alpha: f64,
    /// Root in `[0, 1]` of `c³ − 2c² − c + 1`.
    pub c_plus: f64,
    /// Root in `[0, 1]` of `c³ + 2c² − c − 1`.
    pub c_minus: f64,
    /// `1/√(2 − c₊)`
    pub t_plus: f64,
    /// `1/√(2 + c₋)`
    pub t_minus: f64,
}

pub fn cubic_plus(c: f64) -> f64 {
    ((c - 2.0) * c - 1.0) * c + 1.0
}

pub fn cubic_minus(c: f64) -> f64 {
    ((c + 2.0) * c - 1.0) * c - 1.0
}

fn newton_step(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, x: f64) -> f64 {
    let d = df(x);
    if d == 0.0 {
        x
    } else {
        x - f(x) / d
    }
}

/// Closed trigonometric forms, each polished by one Newton step on its
/// cubic.
pub fn exceptional_constants() -> ExceptionalConstants {
    let alpha = (3.0 * 3f64.sqrt()).atan() / 3.0;
    let sqrt7 = 7f64.sqrt();
    let c_plus0 = 2.0 / 3.0 * (1.0 - sqrt7 * (alpha + PI / 3.0).cos());
    let c_minus0 = -2.0 / 3.0 * (1.0 - sqrt7 * (alpha - PI / 3.0).cos());
    let c_plus = newton_step(cubic_plus, |c| (3.0 * c - 4.0) * c - 1.0, c_plus0);
    let c_minus = newton_step(cubic_minus, |c| (3.0 * c + 4.0) * c - 1.0, c_minus0);
    ExceptionalConstants {
        alpha,
        c_plus,
        c_minus,
        t_plus: 1.0 / (2.0 - c_plus).sqrt(),
        t_minus: 1.0 / (2.0 + c_minus).sqrt(),
    }
}

/// Standard complex Gaussian stream: SplitMix64 words turned into uniforms
/// `u = (w >> 11) · 2⁻⁵³`, then Box–Muller on `(1 − u₁, u₂)` giving
/// `re = √(−2 ln(1−u₁)) cos(2πu₂)` and `im = … sin(2πu₂)`.
struct GaussianStream {
    rng: SplitMix64,
}

impl GaussianStream {
    fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn complex(&mut self) -> Complex64 {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        Complex64::from_polar(r, TAU * u2)
    }
}

/// Gram–Schmidt (two passes) on the columns of a Gaussian matrix; the
/// matrix is filled row-major from the stream.
fn random_unitary(n: usize, stream: &mut GaussianStream) -> Vec<Vec<Complex64>> {
    let mut g = vec![vec![ZERO; n]; n];
    for i in 0..n {
        for col in g.iter_mut() {
            col[i] = stream.complex();
        }
    }
    let mut q: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for mut v in g {
        for _ in 0..2 {
            for u in &q {
                let p = vec_dot(u, &v);
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= p * y;
                }
            }
        }
        let norm = vec_norm(&v);
        for x in v.iter_mut() {
            *x /= norm;
        }
        q.push(v);
    }
    q
}

/// Seeded unitary `n × n` matrix (columns from [`random_unitary`]).
pub fn random_unitary_matrix(n: usize, seed: u64) -> ComplexMatrix {
    let cols = random_unitary(n, &mut GaussianStream::new(seed));
    let mut u = ComplexMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            u[(i, j)] = z;
        }
    }
    u
}

/// `U P V*` with seeded unitaries `U`, `V` (drawn in that order from one
/// stream) and `P = diag(1, …, 1, 0, …, 0)` of the given rank.
///
/// `rank = n` is accepted and yields a unitary matrix.
pub fn random_partial_isometry(n: usize, rank: usize, seed: u64) -> Result<ComplexMatrix> {
    if n > 12 || rank < 1 || rank > n {
        return Err(Error::InvalidRank { n, rank });
    }
    let mut stream = GaussianStream::new(seed);
    let u = random_unitary(n, &mut stream);
    let v = random_unitary(n, &mut stream);
    let mut a = ComplexMatrix::zeros(n);
    for k in 0..rank {
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] += u[k][i] * v[k][j].conj();
            }
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::hermitian_eigen;

    #[test]
    fn exceptional_constants_match_printed_values() {
        let k = exceptional_constants();
        // printed values are truncated, not rounded
        assert_eq!((k.c_plus * 1e5).floor(), 55495.0);
        assert_eq!((k.c_minus * 1e5).floor(), 80193.0);
        assert!(cubic_plus(k.c_plus).abs() < 1e-12);
        assert!(cubic_minus(k.c_minus).abs() < 1e-12);
        assert!((k.t_plus - 1.0 / (2.0 - k.c_plus).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn half_half_example() {
        let a = build(&NilpotentDim5::new(0.5, 0.5).unwrap().into());
        let r3 = 3f64.sqrt();
        let mut want = ComplexMatrix::zeros(5);
        want[(0, 2)] = real(1.0);
        want[(1, 3)] = real(0.5);
        want[(1, 4)] = real(r3 / 4.0);
        want[(2, 3)] = real(r3 / 2.0);
        want[(2, 4)] = real(-0.25);
        want[(3, 4)] = real(r3 / 2.0);
        assert!(a.max_abs_diff(&want) < 1e-15);
        assert!(validate_partial_isometry(&a, 1e-10));
    }

    #[test]
    fn nilpotent_four_at_b_zero() {
        let a = build(&NilpotentDim4::new(0.0).unwrap().into());
        assert_eq!(a[(0, 2)], real(1.0));
        assert_eq!(a[(2, 3)], real(1.0));
        assert!(a.pow(2).frobenius_norm() > 0.0);
        assert_eq!(a.pow(3).frobenius_norm(), 0.0);
    }

    #[test]
    fn ovular_example_from_parameters() {
        let l1 = 0.5 * 3.5f64.sqrt();
        let a = build(&Rank2Dim3::new(real(l1), real(0.25)).unwrap().into());
        let s15 = 15f64.sqrt();
        let want = ComplexMatrix::from_real_rows(&[
            [0.0, 0.5 * 0.5f64.sqrt(), -s15 * 3.5f64.sqrt() / 8.0],
            [0.0, 0.5 * 3.5f64.sqrt(), s15 * 0.5f64.sqrt() / 8.0],
            [0.0, 0.0, 0.25],
        ])
        .unwrap();
        assert!(a.max_abs_diff(&want) < 1e-15);
        assert!(validate_partial_isometry(&a, 1e-10));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(NilpotentDim4::new(1.5).is_err());
        assert!(NilpotentDim4::new(f64::NAN).is_err());
        assert!(NilpotentDim5::new(0.5, -0.1).is_err());
        assert!(Rank2Dim3::new(real(1.0), real(0.0)).is_err());
        assert!(ExceptionalDim5::new(Sign::Plus, f64::INFINITY).is_err());
        assert!(NilpotentDim5::from_parts(0.5, 0.5, 1.0, 0.0).is_err());
    }

    #[test]
    fn edge_parameters_are_accepted() {
        for b in [0.0, 1.0] {
            for t in [0.0, 1.0] {
                let a = build(&NilpotentDim5::new(b, t).unwrap().into());
                assert!(validate_partial_isometry(&a, 1e-12));
            }
        }
    }

    #[test]
    fn validator_examples() {
        let d = ComplexMatrix::from_real_rows(&[[0.5, 0.0], [0.0, 0.0]]).unwrap();
        assert!(!validate_partial_isometry(&d, 1e-10));
        assert!(validate_partial_isometry(&ComplexMatrix::zeros(3), 1e-10));
        let a = build(&NilpotentDim5::new(0.3, 0.7).unwrap().into());
        assert!(validate_partial_isometry(&a, 1e-10));
    }

    #[test]
    fn xi_substitutions() {
        let xi = kernel_vector_xi(&NilpotentDim5::new(1.0, 1.0).unwrap());
        assert_eq!(xi, [1.0, 0.0, 0.0, 0.0, -1.0].map(real).to_vec());
        let xi = kernel_vector_xi(&NilpotentDim5::new(0.0, 0.0).unwrap());
        assert_eq!(xi, [0.0, -1.0, 0.0, 0.0, 0.0].map(real).to_vec());
    }

    #[test]
    fn xi_spans_kernel_of_imaginary_part() {
        let spec = NilpotentDim5::new(0.5, 0.5).unwrap();
        let im = build(&spec.into()).im_part();
        let xi = kernel_vector_xi(&spec);
        assert!(vec_norm(&im.mul_vec(&xi)) < 1e-12);
        // oracle: Im(A) has a one-dimensional kernel
        let e = hermitian_eigen(&im, 1e-10).unwrap();
        let zeros = e.values.iter().filter(|v| v.abs() < 1e-10).count();
        assert_eq!(zeros, 1);
    }

    #[test]
    fn random_partial_isometries() {
        let u = random_partial_isometry(3, 3, 11).unwrap();
        let uu = u.matmul(&u.adjoint());
        assert!(uu.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-12);

        let a = random_partial_isometry(5, 3, 7).unwrap();
        assert!(validate_partial_isometry(&a, 1e-10));
        assert_eq!(a, random_partial_isometry(5, 3, 7).unwrap());

        let a = random_partial_isometry(4, 2, 1).unwrap();
        let e = hermitian_eigen(&a.adjoint().matmul(&a), 1e-10).unwrap();
        let ones = e.values.iter().filter(|v| (*v - 1.0).abs() < 1e-10).count();
        let zeros = e.values.iter().filter(|v| v.abs() < 1e-10).count();
        assert_eq!((ones, zeros), (2, 2));

        assert!(random_partial_isometry(4, 0, 1).is_err());
        assert!(random_partial_isometry(4, 5, 1).is_err());
        assert!(random_partial_isometry(13, 2, 1).is_err());
    }

    #[test]
    fn exceptional_phase_is_a_global_factor() {
        let phi = 1.234;
        let base = build(&ExceptionalDim5::new(Sign::Minus, 0.0).unwrap().into());
        let rot = build(&ExceptionalDim5::new(Sign::Minus, phi).unwrap().into());
        assert!(rot.max_abs_diff(&base.scale(Complex64::from_polar(1.0, phi))) < 1e-15);
        assert!(validate_partial_isometry(&rot, 1e-10));
    }

    #[test]
    fn raw_blocks_layout() {
        // B = [1 0], C = [[0 1],[0 0]]: the 3×3 Jordan block.
        let b = RectBlock::new(1, 2, vec![real(1.0), real(0.0)]).unwrap();
        let c = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        let spec = RawBlocks::new(b, c, 1e-12).unwrap();
        let a = build(&spec.into());
        assert_eq!(a[(0, 1)], real(1.0));
        assert_eq!(a[(1, 2)], real(1.0));
        assert!(validate_partial_isometry(&a, 1e-12));

        let b = RectBlock::new(1, 2, vec![real(0.5), real(0.0)]).unwrap();
        let c = ComplexMatrix::zeros(2);
        assert!(RawBlocks::new(b, c, 1e-12).is_err());
    }
}
