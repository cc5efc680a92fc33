//! Truncated power series with complex coefficients.
//!
//! A [`PowerSeries`] stores the coefficients of `z^0 ..= z^order`. Binary
//! operations between series of different orders truncate to the smaller
//! order. Logarithm, exponential and complex powers are computed with the
//! usual O(n²) recurrences derived from `s' a = a'` and `e' = s' e`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Truncation order used when nothing else is requested.
pub const DEFAULT_ORDER: usize = 10;

/// Absolute tolerance for "constant term is 1" / "constant term is 0" checks.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series of the given order, zero-padding or truncating `coeffs`.
    pub fn new(coeffs: impl IntoIterator<Item = Complex64>, order: usize) -> Self {
        let mut coeffs: Vec<Complex64> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(std::iter::empty(), order)
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        Self::new([c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_real(&[0.0, 1.0], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().copied(), order.min(self.order()))
    }

    pub fn scale(&self, w: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * w).collect(),
        }
    }

    /// Evaluates the truncated polynomial at `z` (Horner).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|k| self.coeffs[k] * other.coeffs[n - k]).sum())
            .collect();
        Self { coeffs }
    }

    /// Quotient `q` with `q * other == self` up to the common order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0 == Complex64::new(0.0, 0.0) {
            return Err(Error::SingularDivision);
        }
        let order = self.order().min(other.order());
        let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let acc: Complex64 = (1..=n).map(|k| other.coeffs[k] * q[n - k]).sum();
            q.push((self.coeffs[n] - acc) / b0);
        }
        Ok(Self { coeffs: q })
    }

    /// Logarithm of a series with constant term 1; the result has constant term 0.
    pub fn log_unit(&self) -> Result<Self> {
        let a = &self.coeffs;
        if (a[0] - 1.0).norm() > UNIT_TOL {
            return Err(Error::BranchUndefined(a[0]));
        }
        let mut s = vec![Complex64::new(0.0, 0.0); a.len()];
        for n in 1..a.len() {
            let acc: Complex64 = (1..n).map(|k| s[k] * a[n - k] * k as f64).sum();
            s[n] = a[n] - acc / n as f64;
        }
        Ok(Self { coeffs: s })
    }

    /// Exponential of a series with constant term 0.
    pub fn exp_unit(&self) -> Result<Self> {
        let s = &self.coeffs;
        if s[0].norm() > UNIT_TOL {
            return Err(Error::NonZeroConstant(s[0]));
        }
        let mut e = vec![Complex64::new(0.0, 0.0); s.len()];
        e[0] = Complex64::new(1.0, 0.0);
        for n in 1..s.len() {
            let acc: Complex64 = (1..=n).map(|k| s[k] * e[n - k] * k as f64).sum();
            e[n] = acc / n as f64;
        }
        Ok(Self { coeffs: e })
    }

    /// Principal branch of `self^w` for a series with constant term 1.
    pub fn pow_complex(&self, w: Complex64) -> Result<Self> {
        self.log_unit()?.scale(w).exp_unit()
    }

    /// Termwise derivative; the order drops by one (a constant stays order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &c)| c * n as f64)
            .collect();
        Self { coeffs }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| f(self.coeffs[n], other.coeffs[n]))
            .collect();
        Self { coeffs }
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "; O(z^{})]", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
