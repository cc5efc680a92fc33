//! `Y(A,B,C) = max_{|z|<=1} (|A + Bz + Cz²| + 1 − |z|²)` for real `A, B, C`.
//!
//! [`y_closed_form`] evaluates the piecewise formula of Choi, Kim and Sugawa
//! and reports which branch fired. [`y_oracle`] is a brute-force scan of a
//! polar grid, used to certify the closed form.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Radial and angular resolution of the certification grid.
pub const CERT_RADIAL: usize = 512;
pub const CERT_ANGULAR: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YInput {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl YInput {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && c.is_finite() {
            Ok(Self { a, b, c })
        } else {
            Err(Error::InvalidParameter(format!(
                "Y inputs must be finite, got ({a}, {b}, {c})"
            )))
        }
    }

    /// Objective `|A + Bz + Cz²| + 1 − |z|²` at a point.
    pub fn objective(&self, z: num_complex::Complex64) -> f64 {
        (self.a + self.b * z + self.c * z * z).norm() + 1.0 - z.norm_sqr()
    }

    /// Lipschitz constant of the objective on the closed disk.
    fn lipschitz(&self) -> f64 {
        self.b.abs() + 2.0 * self.c.abs() + 2.0
    }
}

/// Branch of the piecewise formula that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YCase {
    AcNonnegSum,
    AcNonnegParabola,
    NegFirst,
    NegSecond,
    RSum,
    RDiff,
    RSqrt,
}

impl YCase {
    pub fn label(self) -> &'static str {
        match self {
            YCase::AcNonnegSum => "AC_NONNEG_SUM",
            YCase::AcNonnegParabola => "AC_NONNEG_PARABOLA",
            YCase::NegFirst => "NEG_FIRST",
            YCase::NegSecond => "NEG_SECOND",
            YCase::RSum => "R_SUM",
            YCase::RDiff => "R_DIFF",
            YCase::RSqrt => "R_SQRT",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YResult {
    pub value: f64,
    pub case: YCase,
}

fn near(lhs: f64, rhs: f64) -> bool {
    (lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs().max(rhs.abs()))
}

fn debug_tie(lhs: f64, rhs: f64, v1: f64, v2: f64) {
    if cfg!(debug_assertions) && near(lhs, rhs) {
        assert!(
            (v1 - v2).abs() <= 1e-9,
            "adjacent Y branches disagree at a boundary: {v1} vs {v2}"
        );
    }
}

pub fn y_closed_form(input: &YInput) -> YResult {
    let YInput { a, b, c } = *input;
    let (abs_a, abs_b, abs_c) = (a.abs(), b.abs(), c.abs());
    let b2 = b * b;

    if a * c >= 0.0 {
        let sum = abs_a + abs_b + abs_c;
        let threshold = 2.0 * (1.0 - abs_c);
        if abs_b >= threshold {
            if abs_c < 1.0 {
                debug_tie(
                    abs_b,
                    threshold,
                    sum,
                    1.0 + abs_a + b2 / (4.0 * (1.0 - abs_c)),
                );
            }
            return YResult {
                value: sum,
                case: YCase::AcNonnegSum,
            };
        }
        return YResult {
            value: 1.0 + abs_a + b2 / (4.0 * (1.0 - abs_c)),
            case: YCase::AcNonnegParabola,
        };
    }

    // AC < 0, so C != 0
    let t = -4.0 * a * c * (1.0 / (c * c) - 1.0);
    if t <= b2 && abs_b < 2.0 * (1.0 - abs_c) {
        return YResult {
            value: 1.0 - abs_a + b2 / (4.0 * (1.0 - abs_c)),
            case: YCase::NegFirst,
        };
    }
    if b2 < (4.0 * (1.0 + abs_c).powi(2)).min(t) {
        return YResult {
            value: 1.0 + abs_a + b2 / (4.0 * (1.0 + abs_c)),
            case: YCase::NegSecond,
        };
    }
    r_value(a, b, c)
}

fn r_value(a: f64, b: f64, c: f64) -> YResult {
    let (abs_a, abs_b, abs_c) = (a.abs(), b.abs(), c.abs());
    let abs_ab = (a * b).abs();

    let radicand = 1.0 - b * b / (4.0 * a * c);
    debug_assert!(radicand >= -1e-12, "negative radicand {radicand}");
    let sqrt_value = (abs_a + abs_c) * radicand.max(0.0).sqrt();

    let sum_lhs = abs_c * (abs_b + 4.0 * abs_a);
    if sum_lhs <= abs_ab {
        // value at z = ±1 when A and C have opposite signs
        let value = abs_a + abs_b - abs_c;
        debug_tie(sum_lhs, abs_ab, value, sqrt_value);
        return YResult {
            value,
            case: YCase::RSum,
        };
    }
    let diff_rhs = abs_c * (abs_b - 4.0 * abs_a);
    if abs_ab <= diff_rhs {
        let value = -abs_a + abs_b + abs_c;
        debug_tie(abs_ab, diff_rhs, value, sqrt_value);
        return YResult {
            value,
            case: YCase::RDiff,
        };
    }
    YResult {
        value: sqrt_value,
        case: YCase::RSqrt,
    }
}

/// Brute-force maximum over the polar grid `r_j = j/radial`, `θ_k = 2πk/angular`
/// (both endpoints `r = 0` and `r = 1` included).
///
/// For real coefficients `|A + Bz + Cz²|² = K0 + K1 cos θ + K2 cos 2θ` with
/// `z = r e^{iθ}`, so each ring costs two fused multiply-adds per node and
/// only `θ ∈ [0, π]` needs scanning.
pub fn y_oracle(input: &YInput, radial: usize, angular: usize) -> f64 {
    assert!(radial >= 64, "radial resolution must be at least 64");
    assert!(angular >= 256, "angular resolution must be at least 256");
    let YInput { a, b, c } = *input;

    let half = angular / 2;
    let (cos1, cos2): (Vec<f64>, Vec<f64>) = (0..=half)
        .map(|k| {
            let theta = TAU * k as f64 / angular as f64;
            (theta.cos(), (2.0 * theta).cos())
        })
        .unzip();

    (0..=radial)
        .map(|j| {
            let r = j as f64 / radial as f64;
            let r2 = r * r;
            let k0 = a * a + b * b * r2 + c * c * r2 * r2;
            let k1 = 2.0 * b * r * (a + c * r2);
            let k2 = 2.0 * a * c * r2;
            let best = cos1
                .iter()
                .zip(&cos2)
                .map(|(&c1, &c2)| k1.mul_add(c1, k2 * c2))
                .fold(f64::NEG_INFINITY, f64::max);
            (k0 + best).max(0.0).sqrt() + 1.0 - r2
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Discretisation allowance of the oracle grid for this input.
pub fn grid_allowance(input: &YInput, radial: usize, angular: usize) -> f64 {
    input.lipschitz() * (PI / angular as f64 + 1.0 / radial as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YCertificate {
    pub input: YInput,
    pub closed: YResult,
    pub oracle: f64,
    pub allowance: f64,
    pub discrepancy: f64,
    pub pass: bool,
}

pub fn y_certificate(input: &YInput, tol: f64) -> YCertificate {
    let closed = y_closed_form(input);
    let oracle = y_oracle(input, CERT_RADIAL, CERT_ANGULAR);
    let allowance = grid_allowance(input, CERT_RADIAL, CERT_ANGULAR);
    let discrepancy = (closed.value - oracle).abs();
    YCertificate {
        input: *input,
        closed,
        oracle,
        allowance,
        discrepancy,
        pass: discrepancy <= tol + allowance,
    }
}

pub fn y_certify(input: &YInput, tol: f64) -> bool {
    y_certificate(input, tol).pass
}

/// Certifies a batch in parallel; results keep the input order.
pub fn y_certify_batch(inputs: &[YInput], tol: f64) -> Vec<YCertificate> {
    inputs.par_iter().map(|i| y_certificate(i, tol)).collect()
}
