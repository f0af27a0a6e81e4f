//! Gauss quadrature for the weight `(1 - x²)^(μ - 1/2)` on `(-1, 1)`, `μ > -1/2`.
//!
//! The nodes are the zeros of `C_N^(μ)` (eigenvalues of its Jacobi matrix);
//! the weights are Christoffel numbers `μ_0 / Σ_k p_k(x_i)²` over the
//! orthonormal recurrence, with `μ_0 = √π Γ(μ+1/2) / Γ(μ+1)`.

use crate::error::{Error, Result};
use crate::tridiag;
use crate::zeros::jacobi_matrix;

#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// `n`-point rule; exact for polynomials of degree `2n - 1`.
    pub fn gegenbauer(n: usize, mu: f64) -> Result<Self> {
        if mu.is_nan() || mu <= -0.5 {
            return Err(Error::Domain(format!(
                "weight (1-x^2)^({mu}-1/2) is not integrable"
            )));
        }
        if n == 0 {
            return Err(Error::Domain("quadrature needs at least one node".into()));
        }
        let mass = std::f64::consts::PI.sqrt() * libm::tgamma(mu + 0.5) / libm::tgamma(mu + 1.0);
        let (diag, off) = jacobi_matrix(n, mu);
        let nodes = tridiag::eigenvalues(&diag, &off);
        let weights = nodes
            .iter()
            .map(|&x| {
                // x p_k = b_{k+1} p_{k+1} + b_k p_{k-1}, p_0 = 1
                let (mut prev, mut cur) = (0.0, 1.0);
                let mut sum = 1.0;
                for k in 0..n - 1 {
                    let back = if k == 0 { 0.0 } else { off[k - 1] };
                    let next = (x * cur - back * prev) / off[k];
                    prev = cur;
                    cur = next;
                    sum += cur * cur;
                }
                mass / sum
            })
            .collect();
        Ok(GaussRule { nodes, weights })
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_five_points() {
        let r = GaussRule::gegenbauer(5, 0.5).unwrap();
        assert_abs_diff_eq!(r.nodes[4], 0.906_179_845_938_664, epsilon = 1e-15);
        assert_abs_diff_eq!(r.weights[4], 0.236_926_885_056_189_1, epsilon = 1e-14);
        assert_abs_diff_eq!(r.weights.iter().sum::<f64>(), 2.0, epsilon = 1e-14);
    }

    #[test]
    fn chebyshev_first_kind() {
        // μ = 0: weight (1-x²)^(-1/2), equal weights π/n at cos((2k-1)π/2n)
        let n = 7;
        let r = GaussRule::gegenbauer(n, 0.0).unwrap();
        for (k, (x, w)) in r.nodes.iter().zip(&r.weights).enumerate() {
            let exact = -((2 * k + 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos();
            assert_abs_diff_eq!(*x, exact, epsilon = 1e-15);
            assert_abs_diff_eq!(*w, std::f64::consts::PI / n as f64, epsilon = 1e-14);
        }
    }

    #[test]
    fn singular_weight_moments() {
        // ∫ x² (1-x²)^(μ-1/2) dx = μ_0 / (2(μ+1))
        let mu = -0.2;
        let r = GaussRule::gegenbauer(12, mu).unwrap();
        let m0 = r.integrate(|_| 1.0);
        assert_abs_diff_eq!(r.integrate(|x| x * x), m0 / (2.0 * (mu + 1.0)), epsilon = 1e-13);
        assert_abs_diff_eq!(r.integrate(|x| x.powi(5)), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_non_integrable_weight() {
        assert!(GaussRule::gegenbauer(4, -0.5).is_err());
    }
}
