//! Logarithmic coefficients and the second Hankel determinant `H₂,₁(F_f/2)`.
//!
//! For `f(z) = z + a2 z² + …`, `log(f(z)/z) = 2 Σ γ_n zⁿ`. The determinant
//! `γ1 γ3 − γ2²` has the equivalent monomial form
//! `(a2 a4 − a3² + a2⁴/12) / 4`; both are computed by [`h21_paths`].

use num_complex::Complex64;

use crate::families::CoeffTriple;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaTriple {
    pub g1: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
}

impl GammaTriple {
    pub fn is_finite(&self) -> bool {
        [self.g1, self.g2, self.g3].iter().all(|g| g.is_finite())
    }
}

pub fn log_coeffs(a: &CoeffTriple) -> GammaTriple {
    let CoeffTriple { a2, a3, a4 } = *a;
    GammaTriple {
        g1: a2 / 2.0,
        g2: (a3 - a2 * a2 / 2.0) / 2.0,
        g3: (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0,
    }
}

/// `H₂,₁` via the γ product and via the `a`-monomials, in that order.
pub fn h21_paths(a: &CoeffTriple) -> (Complex64, Complex64) {
    let g = log_coeffs(a);
    let gamma_path = g.g1 * g.g3 - g.g2 * g.g2;
    let CoeffTriple { a2, a3, a4 } = *a;
    let a2_sq = a2 * a2;
    let monomial_path = (a2 * a4 - a3 * a3 + a2_sq * a2_sq / 12.0) / 4.0;
    (gamma_path, monomial_path)
}

/// `γ1 γ3 − γ2²`.
pub fn h21(a: &CoeffTriple) -> Complex64 {
    let (gamma_path, monomial_path) = h21_paths(a);
    debug_assert!(
        (gamma_path - monomial_path).norm()
            <= 1e-14 * (1.0 + gamma_path.norm().max(monomial_path.norm()) * 16.0),
        "H21 evaluation paths disagree: {gamma_path} vs {monomial_path}"
    );
    gamma_path
}

/// Coefficients of `e^{-iθ} f(e^{iθ} z)`.
pub fn rotate(a: &CoeffTriple, theta: f64) -> CoeffTriple {
    let u = Complex64::from_polar(1.0, theta);
    CoeffTriple {
        a2: u * a.a2,
        a3: u * u * a.a3,
        a4: u * u * u * a.a4,
    }
}
