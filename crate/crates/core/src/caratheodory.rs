//! Carathéodory functions `p(z) = 1 + c1 z + c2 z^2 + ...` with `Re p > 0`.
//!
//! The first three coefficients of any such `p` with `c1 >= 0` are covered by
//! the Libera–Złotkiewicz parameters `(p1, p2, p3) ∈ [0,1] × D̄ × D̄`, see
//! [`c_from_params`]. The rational representatives for the degenerate cases
//! `|p1| = 1` and `|p2| = 1` are available as [`rep_degree1`] and
//! [`rep_degree2`].

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{PowerSeries, DEFAULT_ORDER};

/// Slack on `|p2|, |p3| <= 1` for unimodular values built from `e^{iθ}`.
pub const DISK_SLACK: f64 = 1e-12;

/// Slack on the coefficient bound `|c_n| <= 2`.
pub const COEFF_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchurParams {
    pub p1: f64,
    pub p2: Complex64,
    pub p3: Complex64,
}

impl SchurParams {
    pub fn new(p1: f64, p2: Complex64, p3: Complex64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p1) {
            return Err(Error::OutOfRange {
                name: "p1",
                value: p1,
                range: "[0, 1]",
            });
        }
        for (name, p) in [("|p2|", p2), ("|p3|", p3)] {
            if p.norm().is_nan() || p.norm() > 1.0 + DISK_SLACK {
                return Err(Error::OutOfRange {
                    name,
                    value: p.norm(),
                    range: "[0, 1]",
                });
            }
        }
        Ok(Self { p1, p2, p3 })
    }
}

/// First three Taylor coefficients of a Carathéodory function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CTriple {
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: Complex64,
}

impl CTriple {
    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn within_bound(&self) -> bool {
        [self.c1, self.c2, self.c3]
            .iter()
            .all(|c| c.norm() <= 2.0 + COEFF_SLACK)
    }

    /// `1 + c1 z + c2 z^2 + c3 z^3`, zero-padded to `order`.
    pub fn to_series(&self, order: usize) -> PowerSeries {
        PowerSeries::new([Complex64::new(1.0, 0.0), self.c1, self.c2, self.c3], order)
    }
}

pub fn c_from_params(params: &SchurParams) -> CTriple {
    let SchurParams { p1, p2, p3 } = *params;
    let q = 1.0 - p1 * p1;
    let c1 = Complex64::new(2.0 * p1, 0.0);
    let c2 = 2.0 * p1 * p1 + 2.0 * q * p2;
    let c3 = 2.0 * p1.powi(3) + 4.0 * q * p1 * p2 - 2.0 * q * p1 * p2 * p2
        + 2.0 * q * (1.0 - p2.norm_sqr()) * p3;
    CTriple { c1, c2, c3 }
}

/// Anything that can be evaluated inside the disk and expanded at the origin.
pub trait CaratheodoryFunction {
    fn eval(&self, z: Complex64) -> Complex64;
    fn taylor(&self) -> PowerSeries;
}

impl CaratheodoryFunction for PowerSeries {
    fn eval(&self, z: Complex64) -> Complex64 {
        PowerSeries::eval(self, z)
    }

    fn taylor(&self) -> PowerSeries {
        self.clone()
    }
}

/// A rational function `num(z) / den(z)` with `den(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representative {
    num: Vec<Complex64>,
    den: Vec<Complex64>,
}

impl Representative {
    pub fn numerator(&self) -> &[Complex64] {
        &self.num
    }

    pub fn denominator(&self) -> &[Complex64] {
        &self.den
    }

    /// Expansion at the default truncation order.
    pub fn series(&self) -> PowerSeries {
        self.series_to(DEFAULT_ORDER)
    }

    pub fn series_to(&self, order: usize) -> PowerSeries {
        let num = PowerSeries::new(self.num.iter().copied(), order);
        let den = PowerSeries::new(self.den.iter().copied(), order);
        num.div(&den).expect("denominator has constant term 1")
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

impl CaratheodoryFunction for Representative {
    fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.num, z) / horner(&self.den, z)
    }

    fn taylor(&self) -> PowerSeries {
        self.series()
    }
}

/// `(1 + p1 z) / (1 - p1 z)`; unique in the class when `|p1| = 1`.
pub fn rep_degree1(p1: Complex64) -> Result<Representative> {
    if p1.norm().is_nan() || p1.norm() > 1.0 + DISK_SLACK {
        return Err(Error::InvalidParameter(format!("|p1| = {} > 1", p1.norm())));
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(Representative {
        num: vec![one, p1],
        den: vec![one, -p1],
    })
}

/// Degree-two representative; unique in the class when `|p2| = 1`.
///
/// For `|p2| < 1` it is still `(1+ω)/(1−ω)` with the Schur function
/// `ω(z) = z (p1 + p2 z) / (1 + conj(p1) p2 z)`, hence still in the class.
pub fn rep_degree2(p1: Complex64, p2: Complex64) -> Result<Representative> {
    for (name, p) in [("p1", p1), ("p2", p2)] {
        if p.norm().is_nan() || p.norm() > 1.0 + DISK_SLACK {
            return Err(Error::InvalidParameter(format!(
                "|{name}| = {} > 1",
                p.norm()
            )));
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let cross = p1.conj() * p2;
    Ok(Representative {
        num: vec![one, p1 + cross, p2],
        den: vec![one, -(p1 - cross), -p2],
    })
}

/// Falsification check for membership in the Carathéodory class.
///
/// Samples `Re p` on the circle `|z| = radius` at `samples` equispaced angles
/// and checks `|c_n| <= 2` on the retained Taylor coefficients.
pub fn validate_caratheodory<F>(p: &F, radius: f64, samples: usize) -> bool
where
    F: CaratheodoryFunction + ?Sized,
{
    if !(radius > 0.0 && radius < 1.0) || samples == 0 {
        return false;
    }
    let taylor = p.taylor();
    if (taylor.coeff(0) - 1.0).norm() > crate::series::UNIT_TOL {
        return false;
    }
    if taylor.coeffs()[1..]
        .iter()
        .any(|c| c.norm().is_nan() || c.norm() > 2.0 + COEFF_SLACK)
    {
        return false;
    }
    (0..samples).all(|k| {
        let theta = TAU * k as f64 / samples as f64;
        let v = p.eval(Complex64::from_polar(radius, theta));
        v.re > 0.0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn coefficient_examples() {
        let t = c_from_params(&SchurParams::new(1.0, Complex64::new(0.3, 0.4), c(-1.0)).unwrap());
        assert_eq!((t.c1, t.c2, t.c3), (c(2.0), c(2.0), c(2.0)));

        let t = c_from_params(&SchurParams::new(0.0, c(1.0), Complex64::i()).unwrap());
        assert_eq!((t.c1, t.c2, t.c3), (c(0.0), c(2.0), c(0.0)));

        // 2(1/8) + 4(3/4)(1/2)(1/2) - 2(3/4)(1/2)(1/4) + 2(3/4)(3/4)
        let t = c_from_params(&SchurParams::new(0.5, c(0.5), c(1.0)).unwrap());
        assert!(close(t.c1, c(1.0), 1e-15));
        assert!(close(t.c2, c(1.25), 1e-15));
        assert!(close(t.c3, c(1.9375), 1e-15));
    }

    #[test]
    fn params_reject_out_of_range() {
        assert!(SchurParams::new(-0.1, c(0.0), c(0.0)).is_err());
        assert!(SchurParams::new(1.1, c(0.0), c(0.0)).is_err());
        assert!(SchurParams::new(0.5, c(1.01), c(0.0)).is_err());
        assert!(SchurParams::new(0.5, c(0.0), Complex64::new(0.0, -1.5)).is_err());
        assert!(SchurParams::new(0.5, Complex64::from_polar(1.0, 0.7), c(0.0)).is_ok());
        assert!(SchurParams::new(f64::NAN, c(0.0), c(0.0)).is_err());
    }

    #[test]
    fn degree1_examples() {
        let s = rep_degree1(c(1.0)).unwrap().series_to(3);
        for (n, want) in [1.0, 2.0, 2.0, 2.0].into_iter().enumerate() {
            assert!(close(s.coeff(n), c(want), 1e-15));
        }
        let s = rep_degree1(c(0.0)).unwrap().series_to(3);
        assert_eq!(s, PowerSeries::one(3));

        let i = Complex64::i();
        let s = rep_degree1(i).unwrap().series_to(3);
        let want = [c(1.0), 2.0 * i, c(-2.0), -2.0 * i];
        for (n, w) in want.into_iter().enumerate() {
            assert!(close(s.coeff(n), w, 1e-15));
        }
        assert!(rep_degree1(c(1.5)).is_err());
    }

    #[test]
    fn degree2_examples() {
        // (1+z^2)/(1-z^2) and (1-z^2)/(1+z^2)
        let s = rep_degree2(c(0.0), c(1.0)).unwrap().series_to(4);
        let want = [1.0, 0.0, 2.0, 0.0, 2.0];
        for (n, w) in want.into_iter().enumerate() {
            assert!(close(s.coeff(n), c(w), 1e-15));
        }
        let s = rep_degree2(c(0.0), c(-1.0)).unwrap().series_to(4);
        let want = [1.0, 0.0, -2.0, 0.0, 2.0];
        for (n, w) in want.into_iter().enumerate() {
            assert!(close(s.coeff(n), c(w), 1e-15));
        }
    }

    #[test]
    fn degree2_real_p1_with_p2_minus_one_is_extremal_shape() {
        // (p1, p2) = (s, -1): (1 - z^2) / (1 - 2 s z + z^2)
        let s = 0.3;
        let rep = rep_degree2(c(s), c(-1.0)).unwrap();
        let expected = [1.0, 2.0 * s, 4.0 * s * s - 2.0, 8.0 * s.powi(3) - 6.0 * s];
        let series = rep.series_to(3);
        for (n, e) in expected.into_iter().enumerate() {
            assert!(close(series.coeff(n), c(e), 1e-14));
        }
        assert_eq!(rep.numerator(), &[c(1.0), c(0.0), c(-1.0)]);
        assert_eq!(rep.denominator(), &[c(1.0), c(-2.0 * s), c(1.0)]);
    }

    #[test]
    fn validation_examples() {
        let half_plane = rep_degree1(c(1.0)).unwrap();
        assert!(validate_caratheodory(&half_plane, 0.99, 720));
        assert!(validate_caratheodory(&PowerSeries::one(4), 0.99, 720));
        let bad = PowerSeries::from_real(&[1.0, 3.0], 4);
        assert!(!validate_caratheodory(&bad, 0.99, 720));
        assert!(!validate_caratheodory(&half_plane, 1.0, 720));
    }

    #[test]
    fn truncated_half_plane_fails_near_the_boundary() {
        // partial sums of (1+z)/(1-z) oscillate below zero near |z| = 1
        let truncated = rep_degree1(c(1.0)).unwrap().series();
        assert!(!validate_caratheodory(&truncated, 0.999, 720));
    }
}
