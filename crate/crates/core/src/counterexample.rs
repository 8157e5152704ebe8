//! Certification of third-coefficient counterexamples.
//!
//! For poles above the threshold `p₀ ≈ 0.7336` (the unique root of
//! `4 ln(1+p) − 3p` on `(1/3, 1)`) and `λ` inside an explicit window, a
//! negated Möbius driver `ω_a(z) = −(a+z)/(1+az)` produces a member whose
//! third Taylor coefficient strictly exceeds the conjectured bound
//! `(1 + λp² + λ²p⁴)/p²`. The machinery below locates the witness range,
//! picks the witness maximizing the admissible-λ threshold, and cross-checks
//! the resulting coefficient along both the closed-form and the series
//! route before emitting a [`CertifiedCounterexample`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad::gl64;
use crate::roots::{bisect, golden_max};
use crate::schur::{SchurFunction, SMALL_MOBIUS_PARAM};
use crate::umclass::{build, PoleParams};

/// Argument tolerance of the bisection root-finders.
pub const BISECT_TOL: f64 = 1e-12;
/// Argument tolerance of the golden-section witness search.
pub const GOLDEN_TOL: f64 = 1e-10;
/// Witness parameters are capped at `1 − WITNESS_CAP`; the analytic limit at
/// `a = 1` is served by [`lambda_limit`].
pub const WITNESS_CAP: f64 = 1e-9;
/// Guard below [`lambda_limit`]: the window is open, so certification is
/// refused at and beyond `limit − WINDOW_GUARD`.
pub const WINDOW_GUARD: f64 = 1e-12;
/// Guard around the pole-regime boundary `p₀` and the unit endpoint.
pub const REGIME_GUARD: f64 = 1e-6;
/// Series order used when cross-checking a certified witness.
const CERTIFY_SERIES_ORDER: usize = 8;

/// A verified witness record: the member driven by `NegatedMobius(a)` at
/// `(p, λ)` has third coefficient `a₃ > bound`, computed along two
/// independent routes that agree to 1e-9.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertifiedCounterexample {
    p: f64,
    lambda: f64,
    a: f64,
    a3_series: f64,
    a3_closed: f64,
    bound: f64,
    margin: f64,
    window_hi: f64,
}

impl CertifiedCounterexample {
    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The Möbius witness parameter.
    pub fn mobius_a(&self) -> f64 {
        self.a
    }

    pub fn a3_series(&self) -> f64 {
        self.a3_series
    }

    pub fn a3_closed(&self) -> f64 {
        self.a3_closed
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    /// `a₃ − bound`, strictly positive.
    pub fn margin(&self) -> f64 {
        self.margin
    }

    /// The window limit `lambda_limit(p)` in force when certifying.
    pub fn window_hi(&self) -> f64 {
        self.window_hi
    }
}

/// Per-cell outcome of a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Certified,
    OutsideWindow,
    InvalidRegime,
}

impl std::fmt::Display for ScanStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScanStatus::Certified => write!(f, "certified"),
            ScanStatus::OutsideWindow => write!(f, "outside-window"),
            ScanStatus::InvalidRegime => write!(f, "invalid-regime"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanCell {
    pub p: f64,
    pub lambda: f64,
    pub status: ScanStatus,
    pub certificate: Option<CertifiedCounterexample>,
}

/// `4 ln(1+p) − 3p`: positive for poles below `p₀`, negative above. Its sign
/// decides whether the certification window is non-empty.
pub fn window_indicator(p: f64) -> f64 {
    4.0 * p.ln_1p() - 3.0 * p
}

/// The unique root `p₀ ≈ 0.7336` of [`window_indicator`] on `(1/3, 1)`,
/// located by bisection to the requested argument tolerance.
pub fn find_p0(tol: f64) -> f64 {
    bisect(window_indicator, 1.0 / 3.0, 1.0, tol)
        .expect("sign change is guaranteed: indicator(1/3) > 0 > indicator(1)")
}

/// `∫₀^p (a+t)/(1+at) dt`. Closed form `p/a + ((a²−1)/a²) ln(1+ap)` away
/// from `a = 0`; a small-`a` expansion below the crossover where the closed
/// form cancels catastrophically.
pub fn mobius_integral(p: f64, a: f64) -> f64 {
    if a.abs() >= SMALL_MOBIUS_PARAM {
        let a2 = a * a;
        p / a + ((a2 - 1.0) / a2) * (a * p).ln_1p()
    } else {
        let p2 = p * p;
        let p3 = p2 * p;
        p2 / 2.0 + a * (p - p3 / 3.0)
            + a * a * (p2 * p2 / 4.0 - p2 / 2.0)
            + a * a * a * (p3 / 3.0 - p3 * p2 / 5.0)
    }
}

/// `d/da ∫₀^p (a+t)/(1+at) dt = ∫₀^p (1−t²)/(1+at)² dt`, by 64-node
/// Gauss–Legendre quadrature. Always positive.
pub fn mobius_integral_da(p: f64, a: f64) -> f64 {
    gl64().integrate(0.0, p, |t| {
        let d = 1.0 + a * t;
        (1.0 - t * t) / (d * d)
    })
}

/// The witness gauge `2 v/p − a` with `v = ∫₀^p (a+t)/(1+at) dt`; its excess
/// over 1 marks Möbius parameters that admit a violation.
pub fn witness_gauge(p: f64, a: f64) -> f64 {
    2.0 * mobius_integral(p, a) / p - a
}

/// `d/da` of the gauge: `2 v′/p − 1`, decreasing in `a`.
pub fn witness_gauge_da(p: f64, a: f64) -> f64 {
    2.0 * mobius_integral_da(p, a) / p - 1.0
}

/// `d²/da²` of the gauge: `−(4/p) ∫₀^p t(1−t²)/(1+at)³ dt`, always negative.
pub fn witness_gauge_daa(p: f64, a: f64) -> f64 {
    -4.0 / p
        * gl64().integrate(0.0, p, |t| {
            let d = 1.0 + a * t;
            t * (1.0 - t * t) / (d * d * d)
        })
}

/// The unique interior maximizer of the gauge on `(0, 1)`, found as the root
/// of its derivative. Requires `p > p₀` so the derivative changes sign.
pub fn find_gauge_peak(p: f64, tol: f64) -> Result<f64> {
    bisect(|a| witness_gauge_da(p, a), 0.0, 1.0, tol)
}

/// The smallest witness `a₀ ∈ (0, a_peak)` with gauge equal to 1; every
/// `a ∈ (a₀, 1)` then admits some positive λ.
pub fn find_min_witness(p: f64, tol: f64) -> Result<f64> {
    let peak = find_gauge_peak(p, tol)?;
    bisect(|a| witness_gauge(p, a) - 1.0, 0.0, peak, tol)
}

/// The λ threshold `(gauge − 1)/(p² − v²)` of witness `a`: the member driven
/// by `NegatedMobius(a)` violates the conjectured third-coefficient bound
/// exactly for `0 < λ` below this value.
pub fn lambda_threshold(p: f64, a: f64) -> Result<f64> {
    assert!(a > 0.0 && a < 1.0, "witness parameter must lie in (0, 1)");
    let v = mobius_integral(p, a);
    let denom = p * p - v * v;
    if denom.abs() < 1e-14 {
        return Err(Error::DegenerateDenominator(denom));
    }
    Ok((witness_gauge(p, a) - 1.0) / denom)
}

/// The open window limit: `((4/p) ln(1+p) − 3) / (−4p ln(1+p) + 2p²)`, the
/// limit of [`lambda_threshold`] as `a → 1`. Positive exactly on `(p₀, 1)`.
pub fn lambda_limit(p: f64) -> Result<f64> {
    let numer = 4.0 / p * p.ln_1p() - 3.0;
    if numer >= 0.0 {
        // below (or at) p₀ the window is empty
        return Err(Error::InvalidRegime {
            p,
            p0: find_p0(BISECT_TOL),
        });
    }
    let denom = -4.0 * p * p.ln_1p() + 2.0 * p * p;
    Ok(numer / denom)
}

/// Closed form of the third Taylor coefficient of the member driven by
/// `NegatedMobius(a)`:
/// `a₃ = (1/p²) (1 + λ(2pv − p²a) + λ²p²v²)` with `v = ∫₀^p (a+t)/(1+at) dt`.
pub fn a3_closed(p: f64, lambda: f64, a: f64) -> f64 {
    let v = mobius_integral(p, a);
    (1.0 + lambda * (2.0 * p * v - p * p * a) + lambda * lambda * p * p * v * v) / (p * p)
}

/// The conjectured bound at `n = 3`: `(1 + λp² + λ²p⁴)/p²`.
pub fn conjectured_bound_n3(p: f64, lambda: f64) -> f64 {
    let c = lambda * p * p;
    (1.0 + c + c * c) / (p * p)
}

/// `a₃ − bound` for the witness `a`, in the cancellation-free factored form
/// `λ ((gauge − 1) − λ (p² − v²))`. Algebraically identical to
/// `a3_closed − conjectured_bound_n3` but resolves margins far below the
/// rounding floor of the two O(1) closed forms.
pub fn a3_margin(p: f64, lambda: f64, a: f64) -> f64 {
    let v = mobius_integral(p, a);
    lambda * ((witness_gauge(p, a) - 1.0) - lambda * (p * p - v * v))
}

/// Certifies a counterexample at `(p, λ)`.
///
/// Requires `p` strictly inside the regime `(p₀, 1)` and `λ` strictly below
/// [`lambda_limit`]; refuses (rather than searching speculatively) otherwise.
/// The witness is the golden-section maximizer of the certification margin
/// [`a3_margin`] over `[a₀, 1 − 1e-9]`; the violation is then verified both
/// through the closed form and through the series engine, and the window
/// inequality `λ < lambda_threshold(a)` is re-checked against it.
pub fn certify(p: f64, lambda: f64) -> Result<CertifiedCounterexample> {
    let params = PoleParams::new(p, lambda)?;
    let p0 = find_p0(BISECT_TOL);
    if p <= p0 + REGIME_GUARD || p >= 1.0 - REGIME_GUARD {
        return Err(Error::InvalidRegime { p, p0 });
    }
    let limit = lambda_limit(p)?;
    if lambda >= limit - WINDOW_GUARD {
        return Err(Error::OutsideWindow {
            lambda,
            limit,
        });
    }

    let a_floor = find_min_witness(p, BISECT_TOL)?;
    let (a, margin) = golden_max(
        |a| a3_margin(p, lambda, a),
        a_floor,
        1.0 - WITNESS_CAP,
        GOLDEN_TOL,
    );

    // the window inequality and the coefficient inequality are equivalent;
    // check both directions for the returned witness
    let threshold = lambda_threshold(p, a)?;
    let closed = a3_closed(p, lambda, a);
    let bound = conjectured_bound_n3(p, lambda);
    if margin <= 0.0 || lambda >= threshold {
        return Err(Error::ConsistencyCheck(format!(
            "witness search returned a = {a} with margin {margin}, threshold {threshold} \
             against lambda {lambda}"
        )));
    }
    // the factored margin and the raw difference of the two closed forms
    // describe the same number up to rounding of the O(1) terms
    if (closed - bound - margin).abs() > 1e-12 {
        return Err(Error::ConsistencyCheck(format!(
            "margin routes disagree: factored {margin} vs raw {}",
            closed - bound
        )));
    }

    let omega = SchurFunction::negated_mobius(a)?;
    let member = build(params, omega, CERTIFY_SERIES_ORDER)?;
    let a3 = member.f_series().coeff(3);
    if a3.im.abs() > 1e-9 {
        return Err(Error::ConsistencyCheck(format!(
            "series a3 acquired an imaginary part: {}",
            a3.im
        )));
    }
    let a3_series = a3.re;
    if (a3_series - closed).abs() > 1e-9 {
        return Err(Error::ConsistencyCheck(format!(
            "series a3 = {a3_series} and closed form {closed} disagree"
        )));
    }

    Ok(CertifiedCounterexample {
        p,
        lambda,
        a,
        a3_series,
        a3_closed: closed,
        bound,
        margin,
        window_hi: limit,
    })
}

/// Runs [`certify`] over the product of the two grids, mapping the refusal
/// errors to per-cell statuses. Grids must lie strictly inside `(0, 1)`.
pub fn scan(p_grid: &[f64], lambda_grid: &[f64]) -> Vec<ScanCell> {
    assert!(
        p_grid.iter().chain(lambda_grid).all(|&x| x > 0.0 && x < 1.0),
        "scan grids must lie strictly inside (0, 1)"
    );
    let mut cells = Vec::with_capacity(p_grid.len() * lambda_grid.len());
    for &p in p_grid {
        for &lambda in lambda_grid {
            let (status, certificate) = match certify(p, lambda) {
                Ok(c) => (ScanStatus::Certified, Some(c)),
                Err(Error::OutsideWindow { .. }) => (ScanStatus::OutsideWindow, None),
                Err(Error::InvalidRegime { .. }) => (ScanStatus::InvalidRegime, None),
                Err(e) => panic!("scan cell (p = {p}, lambda = {lambda}) failed: {e}"),
            };
            cells.push(ScanCell {
                p,
                lambda,
                status,
                certificate,
            });
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn window_indicator_examples() {
        assert!(window_indicator(1e-12).abs() < 1e-11);
        assert!((window_indicator(1.0) - (4.0 * 2.0f64.ln() - 3.0)).abs() < 1e-15);
        assert!(window_indicator(1.0) < 0.0);
        let third = window_indicator(1.0 / 3.0);
        assert!((third - (4.0 * (4.0f64 / 3.0).ln() - 1.0)).abs() < 1e-15);
        assert!(third > 0.0);
    }

    #[test]
    fn find_p0_reproduces_threshold() {
        let p0 = find_p0(1e-10);
        assert!((p0 - 0.7336).abs() < 5e-4);
        assert!(window_indicator(p0).abs() < 1e-9);
        assert!(window_indicator(p0 - 0.01) > 0.0);
        assert!(window_indicator(p0 + 0.01) < 0.0);
    }

    #[test]
    fn window_indicator_sign_structure() {
        let p0 = find_p0(1e-12);
        for i in 1..1000 {
            let p = i as f64 / 1000.0;
            let g = window_indicator(p);
            if p < p0 - 1e-9 {
                assert!(g > 0.0, "expected positive at {p}");
            } else if p > p0 + 1e-9 {
                assert!(g < 0.0, "expected negative at {p}");
            }
        }
    }

    #[test]
    fn mobius_integral_examples() {
        assert!((mobius_integral(0.6, 0.0) - 0.18).abs() < 1e-15);
        assert!((mobius_integral(0.8, 1.0) - 0.8).abs() < 1e-12);

        let q = gl64().integrate(0.0, 0.8, |t| (0.5 + t) / (1.0 + 0.5 * t));
        assert!((mobius_integral(0.8, 0.5) - q).abs() < 1e-12);
    }

    #[test]
    fn mobius_integral_branches_agree_at_crossover() {
        for a in [
            SMALL_MOBIUS_PARAM * 1.0001,
            SMALL_MOBIUS_PARAM * 0.9999,
            -SMALL_MOBIUS_PARAM * 1.0001,
        ] {
            let q = gl64().integrate(0.0, 0.8, |t| (a + t) / (1.0 + a * t));
            assert!(
                (mobius_integral(0.8, a) - q).abs() < 1e-12,
                "branch mismatch at a = {a}"
            );
        }
    }

    #[test]
    fn mobius_integral_da_examples() {
        let p = 0.8;
        assert!((mobius_integral_da(p, 0.0) - (p - p * p * p / 3.0)).abs() < 1e-14);
        assert!((mobius_integral_da(p, 1.0) - (2.0 * p.ln_1p() - p)).abs() < 1e-14);

        // central finite difference of the integral itself
        let h = 1e-6;
        let fd = (mobius_integral(p, 0.37 + h) - mobius_integral(p, 0.37 - h)) / (2.0 * h);
        assert!((mobius_integral_da(p, 0.37) - fd).abs() < 1e-6);
    }

    #[test]
    fn mobius_integral_is_strictly_increasing_in_a() {
        for i in 1..10 {
            let p = i as f64 / 10.0;
            let mut prev = mobius_integral(p, 0.0);
            for j in 1..=50 {
                let v = mobius_integral(p, j as f64 / 50.0);
                assert!(v > prev, "not increasing at p = {p}, a = {}", j as f64 / 50.0);
                prev = v;
            }
        }
    }

    #[test]
    fn gauge_examples() {
        for p in [0.5, 0.8, 0.95] {
            assert!((witness_gauge(p, 0.0) - p).abs() < 1e-14);
            assert!((witness_gauge(p, 1.0) - 1.0).abs() < 1e-12);
        }

        assert!((witness_gauge_da(0.8, 0.0) - (1.0 - 2.0 / 3.0 * 0.64)).abs() < 1e-13);
        let at_one = 5.0 * 1.8f64.ln() - 3.0;
        assert!((witness_gauge_da(0.8, 1.0) - at_one).abs() < 1e-12);
    }

    #[test]
    fn gauge_is_concave_in_a() {
        for i in 1..10 {
            for j in 1..10 {
                let p = i as f64 / 10.0;
                let a = j as f64 / 10.0;
                assert!(witness_gauge_daa(p, a) < 0.0, "at p = {p}, a = {a}");
            }
        }
    }

    #[test]
    fn find_gauge_peak_examples() {
        let p = 0.8;
        let peak = find_gauge_peak(p, 1e-12).unwrap();
        assert!(witness_gauge_da(p, peak).abs() < 1e-10);
        assert!(witness_gauge_da(p, peak - 0.01) > 0.0);
        assert!(witness_gauge_da(p, peak + 0.01) < 0.0);
        // the peak gauge exceeds both endpoint values max(p, 1)
        assert!(witness_gauge(p, peak) > 1.0);

        // below the threshold the derivative never changes sign
        assert!(matches!(
            find_gauge_peak(0.5, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
        assert!(witness_gauge_da(0.5, 1.0) > 0.24);
    }

    #[test]
    fn find_min_witness_examples() {
        let p = 0.8;
        let a0 = find_min_witness(p, 1e-12).unwrap();
        assert!(witness_gauge(p, a0) - 1.0 < 1e-10);
        assert!((witness_gauge(p, a0) - 1.0).abs() < 1e-10);
        assert!(witness_gauge(p, a0 + 0.01) > 1.0);
        assert!(lambda_threshold(p, a0).unwrap().abs() < 1e-8);
        assert!(lambda_threshold(p, a0 - 0.01).unwrap() < 0.0);
    }

    #[test]
    fn lambda_threshold_tends_to_limit() {
        let p = 0.8;
        let limit = lambda_limit(p).unwrap();
        let near = lambda_threshold(p, 1.0 - 1e-7).unwrap();
        assert!(
            (near - limit).abs() < 1e-4,
            "threshold near 1 is {near}, limit {limit}"
        );
    }

    #[test]
    fn lambda_limit_examples() {
        let l8 = lambda_limit(0.8).unwrap();
        let ln18 = 1.8f64.ln();
        let expect = (5.0 * ln18 - 3.0) / (-3.2 * ln18 + 1.28);
        assert!((l8 - expect).abs() < 1e-14);
        assert!((l8 - 0.101622).abs() < 1e-5);

        assert!((lambda_limit(0.85).unwrap() - 0.1624).abs() < 1e-3);

        let p0 = find_p0(1e-12);
        assert!(lambda_limit(p0 + 1e-6).unwrap() > 0.0);
        assert!(lambda_limit(p0 + 1e-6).unwrap() < 1e-4);
        assert!(matches!(
            lambda_limit(0.5),
            Err(Error::InvalidRegime { .. })
        ));
    }

    #[test]
    fn a3_closed_examples() {
        // at a = 1 the closed form lands exactly on the conjectured bound
        for (p, lambda) in [(0.8, 0.05), (0.9, 0.15)] {
            let at_edge = a3_closed(p, lambda, 1.0);
            assert!((at_edge - conjectured_bound_n3(p, lambda)).abs() < 1e-11);
        }

        assert!((a3_closed(0.8, 0.0, 0.3) - 1.0 / 0.64).abs() < 1e-14);
        assert!((conjectured_bound_n3(0.5, 0.5) - 4.5625).abs() < 1e-15);
        assert!((conjectured_bound_n3(0.8, 0.0) - 1.0 / 0.64).abs() < 1e-14);
    }

    #[test]
    fn a3_closed_matches_series_engine() {
        let (p, lambda, a) = (0.8, 0.05, 0.9);
        let params = PoleParams::new(p, lambda).unwrap();
        let member = build(
            params,
            SchurFunction::negated_mobius(a).unwrap(),
            8,
        )
        .unwrap();
        let series = member.f_series().coeff(3).re;
        assert!((series - a3_closed(p, lambda, a)).abs() < 1e-10);
    }

    #[test]
    fn certify_succeeds_inside_window() {
        let cert = certify(0.8, 0.05).unwrap();
        assert!(cert.margin() > 0.0);
        assert!(cert.a3_closed() > conjectured_bound_n3(0.8, 0.05));
        assert!((conjectured_bound_n3(0.8, 0.05) - 1.6141).abs() < 1e-4);
        assert!((cert.a3_series() - cert.a3_closed()).abs() <= 1e-9);
        assert!(cert.mobius_a() > 0.0 && cert.mobius_a() < 1.0);
        assert!(cert.lambda() < cert.window_hi());

        // the certified member really is a class member
        let member = build(
            PoleParams::new(cert.p(), cert.lambda()).unwrap(),
            SchurFunction::negated_mobius(cert.mobius_a()).unwrap(),
            8,
        )
        .unwrap();
        assert!(member.membership_margin(0.999, 720) > 0.0);
    }

    #[test]
    fn certify_refusals() {
        assert!(matches!(
            certify(0.8, 0.2),
            Err(Error::OutsideWindow { .. })
        ));
        assert!(matches!(
            certify(0.5, 0.05),
            Err(Error::InvalidRegime { .. })
        ));
    }

    #[test]
    fn scan_statuses_follow_the_window() {
        let cells = scan(&[0.75, 0.8, 0.9], &[0.01, 0.05]);
        assert_eq!(cells.len(), 6);
        for cell in &cells {
            let expected = if cell.lambda < lambda_limit(cell.p).unwrap() - WINDOW_GUARD {
                ScanStatus::Certified
            } else {
                ScanStatus::OutsideWindow
            };
            assert_eq!(cell.status, expected, "cell {cell:?}");
            assert_eq!(cell.status == ScanStatus::Certified, cell.certificate.is_some());
        }
        // lambda_limit(0.75) ≈ 0.0278, so exactly one cell refuses
        let refused: Vec<_> = cells
            .iter()
            .filter(|c| c.status == ScanStatus::OutsideWindow)
            .collect();
        assert_eq!(refused.len(), 1);
        assert_eq!((refused[0].p, refused[0].lambda), (0.75, 0.05));

        let invalid = scan(&[0.5], &[0.1, 0.9]);
        assert!(invalid
            .iter()
            .all(|c| c.status == ScanStatus::InvalidRegime));

        assert!(scan(&[], &[0.5]).is_empty());
    }

    #[test]
    fn equivalence_of_window_and_coefficient_inequalities() {
        // smaller sibling of the acceptance sweep
        let p0 = find_p0(1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut checked = 0;
        for _ in 0..300 {
            let p = p0 + 1e-3 + (0.999 - p0 - 1e-3) * rng.gen::<f64>();
            let a = 0.001 + 0.998 * rng.gen::<f64>();
            let lambda = 0.001 + 0.998 * rng.gen::<f64>();
            let threshold = lambda_threshold(p, a).unwrap();
            let a3 = a3_closed(p, lambda, a);
            let bound = conjectured_bound_n3(p, lambda);
            if (lambda - threshold).abs() < 1e-12 || (a3 - bound).abs() < 1e-12 {
                continue; // guard band
            }
            assert_eq!(a3 > bound, lambda < threshold, "at ({p}, {lambda}, {a})");
            checked += 1;
        }
        assert!(checked > 250);
    }

    #[test]
    fn gauge_monotonicity_around_peak() {
        let p = 0.85;
        let peak = find_gauge_peak(p, 1e-12).unwrap();
        let mut prev = witness_gauge(p, 1e-3);
        let mut a = 1e-3;
        while a < peak - 1e-3 {
            a += 0.01;
            let g = witness_gauge(p, a.min(peak - 1e-3));
            assert!(g >= prev - 1e-13);
            prev = g;
        }
        let mut prev = witness_gauge(p, peak + 1e-3);
        let mut a = peak + 1e-3;
        while a < 0.999 {
            a += 0.01;
            let g = witness_gauge(p, a.min(0.999));
            assert!(g <= prev + 1e-13);
            prev = g;
        }
    }
}
