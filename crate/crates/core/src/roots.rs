//! Bracketed bisection and golden-section maximization.
//!
//! Every root used by the certification pipeline comes with an analytic
//! sign-change bracket, so plain bisection is both sufficient and immune to
//! the usual fast-solver failure modes.

use crate::error::{Error, Result};

pub const MAX_BISECT_ITER: usize = 200;

/// Bisection root of `f` on `[lo, hi]`; the interval must carry a sign
/// change. Stops when the bracket is narrower than `tol` (in the argument).
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    assert!(lo < hi, "bracket must be ordered");
    assert!(tol > 0.0, "tolerance must be positive");
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut flo = flo;
    for _ in 0..MAX_BISECT_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo < tol {
            return Ok(mid);
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section maximization of a unimodal `f` on `[lo, hi]`.
/// Returns `(argmax, max)` once the bracket is narrower than `tol`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    assert!(lo < hi, "bracket must be ordered");
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((root - 2.0f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_same_sign_bracket() {
        assert!(matches!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn golden_max_on_parabola() {
        let (x, fx) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-10);
        assert!(fx <= 0.0 && fx > -1e-18);
    }

    #[test]
    fn golden_max_converges_to_endpoint_for_monotone_input() {
        let (x, _) = golden_max(|x| x, 0.0, 1.0, 1e-12);
        assert!((x - 1.0).abs() < 1e-11);
    }
}
