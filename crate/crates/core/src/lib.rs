//! Verification toolkit for coefficient bounds of meromorphic univalent
//! functions with a simple pole at `p ∈ (0, 1)`.
//!
//! Members of the class are built from a driving self-map `ω` of the unit
//! disk through the representation
//!
//! ```text
//! f(z) = z / (1 − z/p + λ z ∫_z^p ω(t) dt),      0 < λ < 1,
//! ```
//!
//! and every quantity of interest is then extracted along at least two
//! independent routes: truncated power series at the origin, closed forms
//! at the pole, and contour integration around it. The crate evaluates the
//! proved bounds for `a₂`, the residue `b₋₁` and the constant Laurent term
//! `b₀`, certifies third-coefficient counterexamples to the conjectured
//! bound `|a₃| ≤ (1 + λp² + λ²p⁴)/p²`, and probes conjectured bounds with
//! reproducible randomized searches.

pub mod counterexample;
pub mod error;
pub mod quad;
pub mod roots;
pub mod schur;
pub mod search;
pub mod series;
pub mod umclass;

pub use counterexample::{CertifiedCounterexample, ScanCell, ScanStatus};
pub use error::{Error, Result};
pub use schur::{Certification, SchurFunction};
pub use search::{ProbeQuantity, ProbeReport};
pub use series::ComplexSeries;
pub use umclass::{B0Case, Disk, ModulusRange, PoleParams, UmFunction};

pub use num_complex::Complex64;
