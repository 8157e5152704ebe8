//! Truncated power-series arithmetic at the origin with complex
//! coefficients.
//!
//! A [`ComplexSeries`] of order `N` stores the coefficients `c_0 .. c_N` of
//! the truncation `c_0 + c_1 z + … + c_N z^N`. Binary operations keep the
//! smaller of the two operand orders: a coefficient is only reported when
//! both inputs determine it, and nothing is zero-padded behind the caller's
//! back.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Constant terms at or below this modulus are refused by [`ComplexSeries::reciprocal`].
pub const RECIPROCAL_FLOOR: f64 = 1e-12;

/// A truncated Taylor expansion at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    /// Wraps raw coefficients; `coeffs[k]` multiplies `z^k`.
    ///
    /// Panics if the list is empty or contains a non-finite entry.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series must carry at least the constant term"
        );
        assert!(
            coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "series coefficients must be finite"
        );
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The constant series `c` of the requested order.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    /// The monomial `z`, zero-padded up to `order`.
    pub fn monomial_z(order: usize) -> Self {
        assert!(order >= 1, "the monomial z needs order at least 1");
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[1] = Complex64::new(1.0, 0.0);
        Self::new(coeffs)
    }

    /// Truncation degree `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeffs[k] + other.coeffs[k])
                .collect(),
        )
    }

    /// Coefficientwise difference, truncated to the smaller order.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeffs[k] - other.coeffs[k])
                .collect(),
        )
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=k {
                acc += self.coeffs[i] * other.coeffs[k - i];
            }
            *slot = acc;
        }
        Self::new(out)
    }

    /// Multiplicative inverse up to the truncation order, by the convolution
    /// recurrence `r_0 = 1/c_0`, `r_n = −(1/c_0) Σ_{k=1..n} c_k r_{n−k}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() <= RECIPROCAL_FLOOR {
            return Err(Error::NearZeroConstantTerm(c0.norm()));
        }
        let inv0 = Complex64::new(1.0, 0.0) / c0;
        let mut r = Vec::with_capacity(self.coeffs.len());
        r.push(inv0);
        for n in 1..self.coeffs.len() {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=n {
                acc += self.coeffs[k] * r[n - k];
            }
            r.push(-inv0 * acc);
        }
        Ok(Self::new(r))
    }

    /// Termwise derivative; the order drops by one (a constant maps to the
    /// zero series of order zero).
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::constant(Complex64::new(0.0, 0.0), 0);
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i + 1) as f64)
                .collect(),
        )
    }

    /// Termwise antiderivative with constant term zero; the order grows by one.
    pub fn antidifferentiate(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Complex64::new(0.0, 0.0));
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.push(c / (k + 1) as f64);
        }
        Self::new(out)
    }

    /// Horner evaluation of the truncated polynomial. The caller is
    /// responsible for staying inside the region of convergence.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}
