//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while constructing or evaluating members
/// of the class and its witnesses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The leading coefficient of a series is too small to invert.
    #[error("constant term modulus {0:.3e} is below the invertibility floor 1e-12")]
    NearZeroConstantTerm(f64),
    /// An evaluation point left the open unit disk.
    #[error("point with |z| = {0} lies outside the open unit disk")]
    OutsideDisk(f64),
    /// An evaluation point collided with the pole.
    #[error("evaluation point coincides with the pole p = {0}")]
    AtPole(f64),
    /// A scalar argument violated its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Coefficients do not describe a self-map of the unit disk.
    #[error("not a self-map of the unit disk: sampled sup |omega| = {0}")]
    NotUnitBounded(f64),
    /// A bracketing root-finder was handed an interval without a sign change.
    #[error("no sign change over [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    /// The case-III extremal Möbius parameter fell outside its feasible range.
    #[error("extremal Mobius parameter a = {a} falls outside (-p, 1) for p = {p}")]
    InfeasibleExtremal { a: f64, p: f64 },
    /// `p² − v²` vanished numerically while forming the lambda threshold.
    #[error("denominator p^2 - v^2 = {0:.3e} is numerically degenerate")]
    DegenerateDenominator(f64),
    /// The requested lambda lies at or above the certified window limit.
    #[error("lambda = {lambda} is not strictly below the window limit {limit}")]
    OutsideWindow { lambda: f64, limit: f64 },
    /// The pole lies outside the regime where certification is possible.
    #[error("p = {p} lies outside the open certification regime ({p0}, 1)")]
    InvalidRegime { p: f64, p0: f64 },
    /// Two independent computations of the same quantity disagreed.
    #[error("cross-check failed: {0}")]
    ConsistencyCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
