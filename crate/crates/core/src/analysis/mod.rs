//! Structural verdicts about numerical ranges.

mod classify;
mod flat;
mod genericity;
mod reducibility;

pub use classify::{classify_3x3, lambda_star, Classification3x3, ShapeVerdict};
pub use flat::{flat_portions, FlatPortion};
pub use genericity::{genericity, GenericityReport, DEFAULT_GAP_TOL};
pub use reducibility::{reducibility, ReducibilityReport, COMMUTANT_REL_TOL};

#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

use crate::pisom::NilpotentDim5;

/// Circularity of `W(A)` for the 5×5 family, decided on the stored
/// parameters: circular iff `b·c·s·t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularityVerdict {
    pub circular: bool,
    /// `½·√((3 + √(5 − 4(b² + c²t²)))/2)` when circular.
    pub radius: Option<f64>,
}

pub fn circularity_criterion_5x5(spec: &NilpotentDim5) -> CircularityVerdict {
    if spec.bcst() == 0.0 {
        CircularityVerdict {
            circular: true,
            radius: Some(disk_radii_5x5(spec).1),
        }
    } else {
        CircularityVerdict {
            circular: false,
            radius: None,
        }
    }
}

/// `(r₋, r₊)` with `r± = ½·√((3 ± √(5 − 4(b² + c²t²)))/2)`.
pub fn disk_radii_5x5(spec: &NilpotentDim5) -> (f64, f64) {
    let (b, c, t) = (spec.b(), spec.c(), spec.t());
    let root = (5.0 - 4.0 * (b * b + c * c * t * t)).sqrt();
    (
        0.5 * ((3.0 - root) / 2.0).sqrt(),
        0.5 * ((3.0 + root) / 2.0).sqrt(),
    )
}

/// Unitary irreducibility of a 5×5 family member, read two ways.
///
/// `as_stated`: irreducible iff `bcst ≠ 0` or exactly one of `b`, `t` is
/// zero. `case_analysis`: irreducible iff `bcst ≠ 0`, or `b = 0` with
/// `0 < t < 1`, or `t = 0` with `0 < b < 1`; the corners of the unit square
/// and the edges `b = 1`, `t = 1` are reducible. The two readings disagree
/// at `(b, t) = (0, 1)` and `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrreducibilityReadings {
    pub as_stated: bool,
    pub case_analysis: bool,
}

pub fn irreducibility_readings_5x5(spec: &NilpotentDim5) -> IrreducibilityReadings {
    let (b, t) = (spec.b(), spec.t());
    let generic = spec.bcst() != 0.0;
    let as_stated = generic || ((b == 0.0) != (t == 0.0));
    let interior = |x: f64| x > 0.0 && x < 1.0;
    let case_analysis = generic || (b == 0.0 && interior(t)) || (t == 0.0 && interior(b));
    IrreducibilityReadings {
        as_stated,
        case_analysis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_examples() {
        let v = circularity_criterion_5x5(&NilpotentDim5::new(0.5, 0.5).unwrap());
        assert!(!v.circular && v.radius.is_none());
        let v = circularity_criterion_5x5(&NilpotentDim5::new(0.0, 0.0).unwrap());
        assert!((v.radius.unwrap() - 0.809017).abs() < 1e-6);
        let v = circularity_criterion_5x5(&NilpotentDim5::new(1.0, 0.0).unwrap());
        assert!((v.radius.unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn readings_disagree_only_at_two_corners() {
        let pts = [0.0, 0.3, 1.0];
        for b in pts {
            for t in pts {
                let r = irreducibility_readings_5x5(&NilpotentDim5::new(b, t).unwrap());
                let corner = (b == 0.0 && t == 1.0) || (b == 1.0 && t == 0.0);
                assert_eq!(r.as_stated != r.case_analysis, corner, "b={b} t={t}");
            }
        }
    }
}
