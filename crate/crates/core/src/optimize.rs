use core::f64::consts::TAU;

#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimiser of `f` on `[lo, hi]`, stopping once
/// the bracket is narrower than `x_tol`. Returns `(x, f(x))`.
pub(crate) fn golden_min<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    x_tol: f64,
) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (hi - lo).abs() > x_tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// `x` reduced into `[0, 2π)`.
pub(crate) fn reduce_angle(x: f64) -> f64 {
    let r = x - TAU * (x / TAU).floor();
    if r >= TAU {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_minimum() {
        let (x, fx) = golden_min(|x| (x - 0.3) * (x - 0.3) + 1.0, -1.0, 2.0, 1e-10);
        // a smooth minimum is only located to about √ε
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 1.0).abs() < 1e-15);
    }

    #[test]
    fn handles_v_shape() {
        let (x, _) = golden_min(|x| (x - 0.1).abs(), -1.0, 1.0, 1e-12);
        assert!((x - 0.1).abs() < 1e-11);
    }
}
