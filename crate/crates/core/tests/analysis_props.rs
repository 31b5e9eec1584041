use std::f64::consts::PI;

use numrange_core::analysis::{
    classify_3x3, flat_portions, genericity, lambda_star, reducibility, ShapeVerdict,
    COMMUTANT_REL_TOL, DEFAULT_GAP_TOL,
};
use numrange_core::kipp::boundary;
use numrange_core::pisom::{
    build, random_partial_isometry, random_unitary_matrix, ExceptionalDim5, NilpotentDim5,
    Rank2Dim3, Sign,
};
use numrange_core::Complex64;
use proptest::prelude::*;

fn unit_disk() -> impl Strategy<Value = Complex64> {
    (0.05f64..0.95, -PI..PI).prop_map(|(r, a)| Complex64::from_polar(r, a))
}

/// Distance from `z` to the closed polygon through `pts`.
fn polygon_distance(pts: &[Complex64], z: Complex64) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let d = b - a;
            let len2 = d.norm_sqr();
            let s = if len2 == 0.0 {
                0.0
            } else {
                (((z - a) * d.conj()).re / len2).clamp(0.0, 1.0)
            };
            (a + d * s - z).norm()
        })
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn genericity_is_rotation_invariant(b in 0.05f64..0.95, t in 0.05f64..0.95, phi in -PI..PI) {
        let a = build(&NilpotentDim5::new(b, t).unwrap().into());
        let r0 = genericity(&a, 180, DEFAULT_GAP_TOL).unwrap();
        let r1 = genericity(&a.scale(Complex64::from_polar(1.0, phi)), 180, DEFAULT_GAP_TOL).unwrap();
        prop_assert_eq!(r0.generic, r1.generic);
        prop_assert!((r0.min_gap - r1.min_gap).abs() < 1e-8, "{} vs {}", r0.min_gap, r1.min_gap);
    }

    #[test]
    fn reducibility_is_a_unitary_invariant(
        (n, rank) in (2usize..=5).prop_flat_map(|n| (Just(n), 1usize..n)),
        seed in any::<u64>(),
        block in any::<bool>(),
    ) {
        // padding with a zero row and column exercises the reducible branch
        let a = if block && n >= 3 {
            let p = random_partial_isometry(n - 1, rank.min(n - 2).max(1), seed).unwrap();
            let mut a = numrange_core::ComplexMatrix::zeros(n);
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    a[(i, j)] = p[(i, j)];
                }
            }
            a
        } else {
            random_partial_isometry(n, rank, seed).unwrap()
        };
        let u = random_unitary_matrix(n, seed.wrapping_add(1));
        let b = u.adjoint().matmul(&a).matmul(&u);
        let ra = reducibility(&a, COMMUTANT_REL_TOL).unwrap();
        let rb = reducibility(&b, COMMUTANT_REL_TOL).unwrap();
        prop_assert_eq!(ra.reducible, rb.reducible);
        prop_assert_eq!(ra.commutant_dim, rb.commutant_dim);
        if let Some(p) = rb.projector {
            prop_assert!((&p.matmul(&p) - &p).frobenius_norm() < 1e-8);
            prop_assert!(p.hermitian_defect() < 1e-12);
            prop_assert!(rb.witness_defect.unwrap() < 1e-8);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lambda_star_is_the_weighted_combination(l1 in unit_disk(), l2 in unit_disk()) {
        let a = build(&Rank2Dim3::new(l1, l2).unwrap().into());
        let (w1, w2) = (1.0 - l2.norm_sqr(), 1.0 - l1.norm_sqr());
        let want = (l1 * w1 + l2 * w2) / (w1 + w2);
        prop_assert!((lambda_star(&a) - want).norm() < 1e-12);
    }

    #[test]
    fn rank_two_family_is_never_flat(l1 in unit_disk(), l2 in unit_disk()) {
        let a = build(&Rank2Dim3::new(l1, l2).unwrap().into());
        let r = classify_3x3(&a, 1e-9).unwrap();
        let special = (l1 - l2).norm() < 1e-9 || (l1 + l2).norm() < 1e-9;
        prop_assert_eq!(matches!(r.verdict, ShapeVerdict::EllipticalDisk { .. }), special);
        prop_assert!(r.verdict != ShapeVerdict::FlatPortion);
    }

    #[test]
    fn opposite_and_equal_pairs_are_elliptical(l in unit_disk(), flip in any::<bool>()) {
        let l2 = if flip { -l } else { l };
        let a = build(&Rank2Dim3::new(l, l2).unwrap().into());
        match classify_3x3(&a, 1e-9).unwrap().verdict {
            ShapeVerdict::EllipticalDisk { foci } => {
                let want = if flip { [l, -l] } else { [l, Complex64::new(0.0, 0.0)] };
                for f in want {
                    prop_assert!(foci.iter().any(|g| (g - f).norm() < 1e-9), "{foci:?}");
                }
            }
            v => prop_assert!(false, "{v:?}"),
        }
    }
}

#[test]
fn flat_portion_endpoints_lie_on_the_support_line_and_the_boundary() {
    for phi in [0.0, 1.0, 4.0] {
        let a = build(&ExceptionalDim5::new(Sign::Plus, phi).unwrap().into());
        let fp = flat_portions(&a, 720, DEFAULT_GAP_TOL).unwrap();
        assert_eq!(fp.len(), 1);
        let bd = boundary(&a, 5760).unwrap();
        for p in &fp {
            let w = Complex64::from_polar(1.0, -p.direction);
            for z in p.endpoints {
                assert!(((w * z).re - p.support_value).abs() < 1e-8);
                let d = polygon_distance(&bd.points, z);
                assert!(d < 1e-6, "phi={phi}: distance {d}");
            }
            assert!(
                (p.direction - phi).abs() < 1e-6 || (p.direction - phi + 2.0 * PI).abs() < 1e-6
            );
        }
    }
}

#[test]
fn exceptional_points_are_exactly_the_non_generic_ones() {
    for phi in [0.0, 0.5, 2.0, 5.5] {
        for s in [Sign::Plus, Sign::Minus] {
            let a = build(&ExceptionalDim5::new(s, phi).unwrap().into());
            assert!(
                !genericity(&a, 720, DEFAULT_GAP_TOL).unwrap().generic,
                "{s:?} {phi}"
            );
        }
    }
    for (b, t) in [(0.5, 0.5), (0.3, 0.8), (0.9, 0.2)] {
        let a = build(&NilpotentDim5::new(b, t).unwrap().into());
        assert!(genericity(&a, 720, DEFAULT_GAP_TOL).unwrap().generic);
    }
}
