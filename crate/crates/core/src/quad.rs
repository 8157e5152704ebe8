//! Gauss–Legendre quadrature.
//!
//! Nodes and weights are generated by Newton iteration on the Legendre
//! recurrence; the 64-node rule used throughout the crate is built once and
//! sanity-checked against a closed-form integral before first use.

use std::sync::OnceLock;

use num_complex::Complex64;

/// A Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "a quadrature rule needs at least two nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Chebyshev estimate of the i-th root of P_n, then Newton.
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..64 {
                let (p, dp) = legendre_and_derivative(n, z);
                let step = p / dp;
                z -= step;
                if step.abs() <= 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_and_derivative(n, z);
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// ∫_lo^hi f(t) dt.
    pub fn integrate<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        half * acc
    }

    /// ∫ f along the straight segment from 0 to `end` in the complex plane.
    pub fn integrate_segment<F: Fn(Complex64) -> Complex64>(
        &self,
        end: Complex64,
        f: F,
    ) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let s = 0.5 * (x + 1.0); // map [-1, 1] onto [0, 1]
            acc += w * f(end * s);
        }
        end * 0.5 * acc
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    // (j+1) P_{j+1} = (2j+1) x P_j − j P_{j−1}
    let mut p = 1.0;
    let mut p_prev = 0.0;
    for j in 0..n {
        let next = ((2 * j + 1) as f64 * x * p - j as f64 * p_prev) / (j + 1) as f64;
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// The shared 64-node rule. Built on first use and checked once against the
/// closed form of ∫₀^{0.8} (1/2 + t)/(1 + t/2) dt.
pub fn gl64() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| {
        let rule = GaussLegendre::new(64);
        let q = rule.integrate(0.0, 0.8, |t| (0.5 + t) / (1.0 + 0.5 * t));
        let exact = 0.8 / 0.5 + ((0.25 - 1.0) / 0.25) * 0.4f64.ln_1p();
        assert!(
            (q - exact).abs() < 1e-13,
            "Gauss-Legendre self-check failed: {q} vs {exact}"
        );
        rule
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_polynomials() {
        let rule = GaussLegendre::new(8);
        // degree 15 is the highest an 8-node rule integrates exactly
        let q = rule.integrate(-1.0, 1.0, |x| x.powi(14));
        assert!((q - 2.0 / 15.0).abs() < 1e-14);
        let odd = rule.integrate(-1.0, 1.0, |x| x.powi(15));
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn nodes_are_symmetric_and_weights_sum_to_two() {
        let rule = gl64();
        let total: f64 = rule.weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
        for i in 0..rule.len() {
            assert!((rule.nodes[i] + rule.nodes[rule.len() - 1 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn transcendental_integral() {
        let q = gl64().integrate(0.0, 1.0, |t| (1.0 + t).ln());
        assert!((q - (2.0 * 2.0f64.ln() - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn segment_integration_matches_antiderivative() {
        // ∫₀^z t² dt = z³/3 along the straight segment
        let z = Complex64::new(0.4, 0.3);
        let q = gl64().integrate_segment(z, |t| t * t);
        assert!((q - z * z * z / 3.0).norm() < 1e-15);
    }
}
