//! Construction and verification of class members.
//!
//! A member with pole `p` and parameter `λ` is built from a driving
//! self-map `ω` through
//!
//! ```text
//! f(z) = z / (1 − z/p + λ z (V(p) − V(z))),      V(z) = ∫₀^z ω(t) dt,
//! ```
//!
//! which carries the membership condition `|U_f| < λ` for
//! `U_f = (z/f) − z (z/f)′ − 1 = λ z² ω(z)`. The module exposes the Taylor
//! side (series at the origin), the Laurent side (residue and constant term
//! at the pole, both closed-form and by contour integration) and the proved
//! variability bounds for `a₂`, `b₋₁` and `b₀`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::schur::SchurFunction;
use crate::series::ComplexSeries;

/// Pole location and class parameter, both strictly inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoleParams {
    p: f64,
    lambda: f64,
}

impl PoleParams {
    pub fn new(p: f64, lambda: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "pole location must lie in (0, 1), got {p}"
            )));
        }
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "lambda must lie in (0, 1), got {lambda}"
            )));
        }
        Ok(Self { p, lambda })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

/// A disk `{center + radius·u : |u| ≤ 1}` describing a region of variability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disk {
    center: Complex64,
    radius: f64,
}

impl Disk {
    pub fn new(center: Complex64, radius: f64) -> Self {
        assert!(radius >= 0.0, "radius must be nonnegative");
        Self { center, radius }
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        (z - self.center).norm() <= self.radius + slack
    }
}

/// A closed interval of attainable moduli.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModulusRange {
    lo: f64,
    hi: f64,
}

impl ModulusRange {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(0.0 <= lo && lo <= hi, "range must satisfy 0 <= lo <= hi");
        Self { lo, hi }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn contains(&self, x: f64, slack: f64) -> bool {
        x >= self.lo - slack && x <= self.hi + slack
    }
}

/// Which branch of the `b₀` bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum B0Case {
    I,
    II,
    III,
}

impl std::fmt::Display for B0Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            B0Case::I => write!(f, "I"),
            B0Case::II => write!(f, "II"),
            B0Case::III => write!(f, "III"),
        }
    }
}

/// A constructed class member: parameters, driving function, the denominator
/// series of `z/f`, and the Taylor series of `f` at the origin.
#[derive(Debug, Clone)]
pub struct UmFunction {
    params: PoleParams,
    omega: SchurFunction,
    v_at_pole: Complex64,
    denom: ComplexSeries,
    f_series: ComplexSeries,
}

/// Builds the member driven by `omega`, with Taylor data through order `n`.
///
/// The denominator series is `1 − z/p + λ z (V(p) − V(z))` where `V(p)` is
/// evaluated along the exact route (closed form or quadrature) and `V(z)` as
/// the antiderivative of the Taylor expansion of `ω`; `f` is then `z` times
/// the series reciprocal, which pins `a₀ = 0`, `a₁ = 1` exactly.
pub fn build(params: PoleParams, omega: SchurFunction, n: usize) -> Result<UmFunction> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "series order must be at least 4, got {n}"
        )));
    }
    let p = params.p();
    let lambda = params.lambda();
    let v_at_pole = omega.antiderivative_at(Complex64::new(p, 0.0))?;
    let v_series = omega.taylor(n).antidifferentiate();

    let mut d = vec![Complex64::new(0.0, 0.0); n + 1];
    d[0] = Complex64::new(1.0, 0.0);
    d[1] = -Complex64::new(1.0 / p, 0.0) + lambda * v_at_pole;
    for (k, slot) in d.iter_mut().enumerate().skip(2) {
        *slot = -lambda * v_series.coeff(k - 1);
    }
    let denom = ComplexSeries::new(d);

    let recip = denom.reciprocal()?;
    let mut f = Vec::with_capacity(n + 1);
    f.push(Complex64::new(0.0, 0.0));
    f.extend_from_slice(&recip.coeffs()[..n]);
    let f_series = ComplexSeries::new(f);

    Ok(UmFunction {
        params,
        omega,
        v_at_pole,
        denom,
        f_series,
    })
}

impl UmFunction {
    pub fn params(&self) -> PoleParams {
        self.params
    }

    pub fn omega(&self) -> &SchurFunction {
        &self.omega
    }

    /// `∫₀^p ω(t) dt` along the exact route.
    pub fn v_at_pole(&self) -> Complex64 {
        self.v_at_pole
    }

    /// The series of `z/f` at the origin.
    pub fn denom(&self) -> &ComplexSeries {
        &self.denom
    }

    /// The Taylor series of `f` at the origin (`a₀ = 0`, `a₁ = 1`).
    pub fn f_series(&self) -> &ComplexSeries {
        &self.f_series
    }

    pub fn order(&self) -> usize {
        self.f_series.order()
    }

    /// Closed-form evaluation of `f`, valid on the disk minus the pole.
    pub fn eval_f(&self, z: Complex64) -> Result<Complex64> {
        let p = self.params.p();
        if (z - Complex64::new(p, 0.0)).norm() < 1e-12 {
            return Err(Error::AtPole(p));
        }
        let vz = self.omega.antiderivative_at(z)?;
        let denom = 1.0 - z / p + self.params.lambda() * z * (self.v_at_pole - vz);
        Ok(z / denom)
    }

    /// Closed-form denominator of `z/f`; vanishes at the pole.
    pub fn denom_closed(&self, z: Complex64) -> Result<Complex64> {
        let vz = self.omega.antiderivative_at(z)?;
        Ok(1.0 - z / self.params.p() + self.params.lambda() * z * (self.v_at_pole - vz))
    }

    /// The series of `U_f = (z/f) − z (z/f)′ − 1`, through order `n − 1`.
    pub fn uf_series(&self) -> ComplexSeries {
        let dprime = self.denom.differentiate();
        let z = ComplexSeries::monomial_z(dprime.order().max(1));
        let z_dprime = z.mul(&dprime);
        let diff = self.denom.sub(&z_dprime);
        let one = ComplexSeries::constant(Complex64::new(1.0, 0.0), diff.order());
        diff.sub(&one)
    }

    /// `λ − max |λ z² ω(z)|` over a circular grid, using the exact identity
    /// `U_f = λ z² ω(z)`. Positive for every genuine member.
    pub fn membership_margin(&self, grid_radius: f64, grid_points: usize) -> f64 {
        assert!(grid_radius > 0.0 && grid_radius < 1.0);
        assert!(grid_points >= 1);
        let lambda = self.params.lambda();
        let mut sup: f64 = 0.0;
        for j in 0..grid_points {
            let theta = std::f64::consts::TAU * j as f64 / grid_points as f64;
            let z = Complex64::from_polar(grid_radius, theta);
            let w = self.omega.eval(z).expect("grid lies inside the disk");
            sup = sup.max((lambda * z * z * w).norm());
        }
        lambda - sup
    }

    /// Trapezoid-rule approximation of the Laurent coefficient `b_k` at the
    /// pole, `(1/2πi) ∮_{|z−p|=rho} f(z) (z−p)^{−(k+1)} dz`, with `m` nodes.
    /// Exponentially accurate in `m` for analytic `f`.
    pub fn laurent_numeric(&self, k: i32, rho: f64, m: usize) -> Result<Complex64> {
        if k < -1 {
            return Err(Error::InvalidParameter(format!(
                "Laurent index must be at least -1, got {k}"
            )));
        }
        let p = self.params.p();
        if !(rho > 0.0 && rho < p.min(1.0 - p)) {
            return Err(Error::InvalidParameter(format!(
                "contour radius must lie in (0, min(p, 1-p)), got {rho}"
            )));
        }
        if m < 64 {
            return Err(Error::InvalidParameter(format!(
                "contour needs at least 64 nodes, got {m}"
            )));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..m {
            let theta = std::f64::consts::TAU * j as f64 / m as f64;
            let zeta = Complex64::from_polar(rho, theta);
            let fz = self.eval_f(Complex64::new(p, 0.0) + zeta)?;
            acc += fz * zeta.powi(-k);
        }
        Ok(acc / m as f64)
    }
}

/// Default contour radius for Laurent extraction: half the distance from the
/// pole to the nearer of the origin and the boundary.
pub fn default_contour_radius(params: PoleParams) -> f64 {
    0.5 * params.p().min(1.0 - params.p())
}

/// Default node count for Laurent extraction.
pub const DEFAULT_CONTOUR_NODES: usize = 256;

/// Region of variability of `a₂`: the disk `{1/p − λ p u : |u| ≤ 1}`.
pub fn a2_disk(params: PoleParams) -> Disk {
    Disk::new(
        Complex64::new(1.0 / params.p(), 0.0),
        params.lambda() * params.p(),
    )
}

/// Sharp upper bound `(1 + λp²)/p` on `|a₂|`.
pub fn a2_abs_bound(params: PoleParams) -> f64 {
    (1.0 + params.lambda() * params.p() * params.p()) / params.p()
}

/// Closed form of the residue at the pole, `b₋₁ = −p²/(1 + λp²ω(p))`.
pub fn residue(params: PoleParams, omega: &SchurFunction) -> Complex64 {
    let p = params.p();
    let wp = omega
        .eval(Complex64::new(p, 0.0))
        .expect("pole lies inside the disk");
    -p * p / (1.0 + params.lambda() * p * p * wp)
}

/// Attainable moduli of the residue: `[p²/(1+λp²), p²/(1−λp²)]`.
pub fn residue_modulus_range(params: PoleParams) -> ModulusRange {
    let p2 = params.p() * params.p();
    let c = params.lambda() * p2;
    ModulusRange::new(p2 / (1.0 + c), p2 / (1.0 - c))
}

/// Closed form of the constant Laurent term,
/// `b₀ = (−2p + λp⁴ω′(p)) / (2 (1 + λp²ω(p))²)`.
pub fn laurent_b0(params: PoleParams, omega: &SchurFunction) -> Complex64 {
    let p = params.p();
    let zp = Complex64::new(p, 0.0);
    let wp = omega.eval(zp).expect("pole lies inside the disk");
    let dwp = omega.deriv(zp).expect("pole lies inside the disk");
    let denom = 1.0 + params.lambda() * p * p * wp;
    (-2.0 * p + params.lambda() * p.powi(4) * dwp) / (2.0 * denom * denom)
}

/// `(2p² + p − 2)/p³`, the λ value separating the two `b₀` bound regimes
/// once the pole exceeds the small-pole threshold.
pub fn b0_case_boundary(p: f64) -> f64 {
    (2.0 * p * p + p - 2.0) / (p * p * p)
}

/// `(√17 − 1)/4`, the root of `2p² + p − 2`; below it the `b₀` bound is
/// always `p/(1−λp²)²`.
pub fn small_pole_threshold() -> f64 {
    (17.0f64.sqrt() - 1.0) / 4.0
}

/// Sharp bound on `|b₀|` with its case tag. Case I: small pole. Case II:
/// `λ ≥ (2p²+p−2)/p³` (closed on the left). Case III: the remaining regime,
/// where the bound drops below `p/(1−λp²)²`.
pub fn b0_bound(params: PoleParams) -> (f64, B0Case) {
    let p = params.p();
    let lambda = params.lambda();
    let simple = p / (1.0 - lambda * p * p).powi(2);
    if p <= small_pole_threshold() {
        (simple, B0Case::I)
    } else if lambda >= b0_case_boundary(p) {
        (simple, B0Case::II)
    } else {
        let a_big = lambda * p.powi(3) - 2.0 * p * p + 2.0;
        let bound = p / (2.0 * (1.0 - p * p)) * a_big / (1.0 - lambda * p * a_big);
        (bound, B0Case::III)
    }
}

/// The profile `D(x) = (A − Bx²)/(1 − Cx)²` with `A = 2 − 2p² + λp³`,
/// `B = λp³`, `C = λp²`, whose maximum over `x = |ω(p)| ∈ [0, 1]` yields the
/// `b₀` bound.
pub fn b0_profile(params: PoleParams, x: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x));
    let p = params.p();
    let lambda = params.lambda();
    let a_big = 2.0 - 2.0 * p * p + lambda * p.powi(3);
    let b_big = lambda * p.powi(3);
    let c_big = lambda * p * p;
    (a_big - b_big * x * x) / (1.0 - c_big * x).powi(2)
}

/// Argmax of the profile over `[0, 1]`: `min(1, (2 − 2p² + λp³)/p)`.
pub fn b0_profile_argmax(params: PoleParams) -> f64 {
    let p = params.p();
    let xstar = (2.0 - 2.0 * p * p + params.lambda() * p.powi(3)) / p;
    xstar.min(1.0)
}

/// The Möbius parameter `a ∈ (−p, 1)` whose negated Möbius map attains the
/// case-III `b₀` bound, solving `(a+p)/(1+ap) = (2−2p²+λp³)/p`.
pub fn b0_case_iii_extremal_a(params: PoleParams) -> Result<f64> {
    let (_, case) = b0_bound(params);
    if case != B0Case::III {
        return Err(Error::InvalidParameter(format!(
            "case III does not apply at p = {}, lambda = {}",
            params.p(),
            params.lambda()
        )));
    }
    let p = params.p();
    let xstar = (2.0 - 2.0 * p * p + params.lambda() * p.powi(3)) / p;
    let a = (xstar - p) / (1.0 - xstar * p);
    if a > -p && a < 1.0 {
        Ok(a)
    } else {
        Err(Error::InfeasibleExtremal { a, p })
    }
}

/// The conjectured Laurent coefficient bound `λⁿ p^{n+1} / (1 − λp²)^{n+2}`,
/// exposed as a formula only; its truth status is probed, never assumed.
pub fn bhowmik_parveen_bound(params: PoleParams, n: u32) -> f64 {
    let p = params.p();
    let lambda = params.lambda();
    lambda.powi(n as i32) * p.powi(n as i32 + 1) / (1.0 - lambda * p * p).powi(n as i32 + 2)
}
