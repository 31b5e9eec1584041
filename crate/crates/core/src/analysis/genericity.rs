use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::kipp::{check_grid, eigen_at, sweep, SupportSweep};
use crate::matcore::ComplexMatrix;
use crate::optimize::{golden_min, reduce_angle};
use crate::{Error, Result};

pub const DEFAULT_GAP_TOL: f64 = 1e-7;
/// Number of smallest grid minima that get refined.
const REFINED_MINIMA: usize = 16;
const THETA_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct GenericityReport {
    pub generic: bool,
    /// Smallest `λⱼ(θ) − λⱼ₊₁(θ)` over all θ and adjacent pairs.
    pub min_gap: f64,
    pub witness_theta: Option<f64>,
    /// 1-based index `j` of the colliding pair `(λⱼ, λⱼ₊₁)`.
    pub witness_level: Option<usize>,
}

/// A refined local minimum of one eigenvalue gap.
#[derive(Debug, Clone, Copy)]
pub(crate) struct GapMinimum {
    pub theta: f64,
    pub level: usize,
    pub gap: f64,
}

/// Grid local minima of the gaps at the requested levels (1-based),
/// smallest first, each refined by golden-section search on its two
/// neighbouring grid intervals.
pub(crate) fn refined_gap_minima(
    a: &ComplexMatrix,
    sw: &SupportSweep,
    levels: &[usize],
) -> Result<Vec<GapMinimum>> {
    let m = sw.len();
    let step = 2.0 * PI / m as f64;
    let mut grid_minima = Vec::new();
    for &level in levels {
        let gaps: Vec<f64> = sw
            .eigs
            .iter()
            .map(|row| row[level - 1] - row[level])
            .collect();
        for i in 0..m {
            let prev = gaps[(i + m - 1) % m];
            let next = gaps[(i + 1) % m];
            if gaps[i] <= prev && gaps[i] <= next {
                grid_minima.push(GapMinimum {
                    theta: sw.thetas[i],
                    level,
                    gap: gaps[i],
                });
            }
        }
    }
    grid_minima.sort_by(|x, y| x.gap.total_cmp(&y.gap));
    grid_minima.truncate(REFINED_MINIMA);

    let mut refined = Vec::with_capacity(grid_minima.len());
    for g in grid_minima {
        let mut failure = None;
        let (theta, gap) = golden_min(
            |t| match eigen_at(a, t) {
                Ok(e) => e.values[g.level - 1] - e.values[g.level],
                Err(err) => {
                    failure = Some(err);
                    f64::INFINITY
                }
            },
            g.theta - step,
            g.theta + step,
            THETA_TOL,
        );
        if let Some(err) = failure {
            return Err(err);
        }
        refined.push(if gap < g.gap {
            GapMinimum {
                theta: wrap_angle(theta),
                level: g.level,
                gap,
            }
        } else {
            g
        });
    }
    refined.sort_by(|x, y| x.gap.total_cmp(&y.gap));
    Ok(refined)
}

/// Into `(−π, π]`.
pub(crate) fn wrap_angle(t: f64) -> f64 {
    let mut x = reduce_angle(t);
    if x > PI {
        x -= 2.0 * PI;
    }
    x
}

/// Decides whether all eigenvalues of `Re(e^{−iθ}A)` are simple for every
/// θ: the smallest refined adjacent gap must exceed `gap_tol`.
pub fn genericity(a: &ComplexMatrix, m: usize, gap_tol: f64) -> Result<GenericityReport> {
    check_grid(m)?;
    let coarse = genericity_once(a, m, gap_tol)?;
    let fine = genericity_once(a, 2 * m, gap_tol)?;
    if coarse.generic != fine.generic {
        return Err(Error::GridUnstable {
            coarse: m,
            fine: 2 * m,
        });
    }
    Ok(coarse)
}

fn genericity_once(a: &ComplexMatrix, m: usize, gap_tol: f64) -> Result<GenericityReport> {
    let n = a.dim();
    if n == 1 {
        return Ok(GenericityReport {
            generic: true,
            min_gap: f64::INFINITY,
            witness_theta: None,
            witness_level: None,
        });
    }
    let sw = sweep(a, m)?;
    let levels: Vec<usize> = (1..n).collect();
    let minima = refined_gap_minima(a, &sw, &levels)?;
    let best = minima[0];
    Ok(GenericityReport {
        generic: best.gap > gap_tol,
        min_gap: best.gap,
        witness_theta: Some(best.theta),
        witness_level: Some(best.level),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pisom::{build, ExceptionalDim5, NilpotentDim4, Sign};

    #[test]
    fn nilpotent_four_is_generic() {
        let a = build(&NilpotentDim4::new(0.5).unwrap().into());
        let r = genericity(&a, 360, DEFAULT_GAP_TOL).unwrap();
        assert!(r.generic);
        assert!(r.min_gap > 0.1);
    }

    #[test]
    fn exceptional_plus_collides_at_an_extreme() {
        // the top pair collides at θ = 0 and, equivalently, the bottom pair at θ = π
        let a = build(&ExceptionalDim5::new(Sign::Plus, 0.0).unwrap().into());
        let r = genericity(&a, 720, DEFAULT_GAP_TOL).unwrap();
        assert!(!r.generic);
        let level = r.witness_level.unwrap();
        assert!(level == 1 || level == 4, "level {level}");
        let e = eigen_at(&a, r.witness_theta.unwrap()).unwrap();
        assert!((e.values[level - 1].abs() - 0.623489).abs() < 1e-5);
        assert!((e.values[level].abs() - 0.623489).abs() < 1e-5);
    }

    #[test]
    fn exceptional_minus_collides_inside() {
        let a = build(&ExceptionalDim5::new(Sign::Minus, 0.0).unwrap().into());
        let r = genericity(&a, 720, DEFAULT_GAP_TOL).unwrap();
        assert!(!r.generic);
        let level = r.witness_level.unwrap();
        assert!(level > 1 && level < 4, "level {level}");
    }

    #[test]
    fn scalar_matrix_is_not_generic() {
        let r = genericity(&ComplexMatrix::identity(3), 16, DEFAULT_GAP_TOL).unwrap();
        assert!(!r.generic);
        assert_eq!(r.min_gap, 0.0);
    }

    #[test]
    fn wrap() {
        assert!((wrap_angle(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert!((wrap_angle(PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-15);
    }
}
