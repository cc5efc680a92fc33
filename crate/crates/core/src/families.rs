//! The three function classes and their coefficient maps.
//!
//! Each class is tied to a Carathéodory function `p` by a defining relation:
//!
//! | class | relation |
//! |---|---|
//! | β-spirallike of order α | `e^{-iβ} z f'/f = ((1−α) p + α) cos β − i sin β` |
//! | Ozaki `G(ν)` | `ν (p − 1) f' = −2 z f''` |
//! | Robertson `F₀(λ)` | `z f''/f' = (2λ+1)/2 · (p − 1)` |
//!
//! [`coeffs_closed_form`] gives `(a2, a3, a4)` as polynomials in `c1, c2, c3`;
//! [`coeffs_ode_oracle`] solves the relation order by order instead, and the
//! two are checked against each other in the test suites.
//!
//! The Ozaki map uses the direct-solve sign `a2 = −ν c1/4`. The sign-flipped
//! convention is the rotation `f ↦ −f(−z)`, which leaves `|H₂,₁|` unchanged.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use num_complex::Complex64;

use crate::caratheodory::{rep_degree2, CTriple, Representative};
use crate::error::{Error, Result};
use crate::series::{PowerSeries, DEFAULT_ORDER, UNIT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Spirallike,
    Ozaki,
    Robertson,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Spirallike => "spirallike",
            FamilyTag::Ozaki => "ozaki",
            FamilyTag::Robertson => "robertson",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Spirallike { alpha: f64, beta: f64 },
    Ozaki { nu: f64 },
    Robertson { lambda: f64 },
}

impl FamilySpec {
    pub fn spirallike(alpha: f64, beta: f64) -> Result<Self> {
        Self::Spirallike { alpha, beta }.validated()
    }

    pub fn ozaki(nu: f64) -> Result<Self> {
        Self::Ozaki { nu }.validated()
    }

    pub fn robertson(lambda: f64) -> Result<Self> {
        Self::Robertson { lambda }.validated()
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilySpec::Spirallike { .. } => FamilyTag::Spirallike,
            FamilySpec::Ozaki { .. } => FamilyTag::Ozaki,
            FamilySpec::Robertson { .. } => FamilyTag::Robertson,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Spirallike { alpha, beta } => {
                if !(0.0..1.0).contains(&alpha) {
                    return Err(Error::OutOfRange {
                        name: "alpha",
                        value: alpha,
                        range: "[0, 1)",
                    });
                }
                if !(beta > -FRAC_PI_2 && beta < FRAC_PI_2) {
                    return Err(Error::OutOfRange {
                        name: "beta",
                        value: beta,
                        range: "(-pi/2, pi/2)",
                    });
                }
            }
            FamilySpec::Ozaki { nu } => {
                if !(nu > 0.0 && nu <= 1.0) {
                    return Err(Error::OutOfRange {
                        name: "nu",
                        value: nu,
                        range: "(0, 1]",
                    });
                }
            }
            FamilySpec::Robertson { lambda } => {
                if !(0.5..=1.0).contains(&lambda) {
                    return Err(Error::OutOfRange {
                        name: "lambda",
                        value: lambda,
                        range: "[1/2, 1]",
                    });
                }
            }
        }
        Ok(())
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Spirallike { alpha, beta } => {
                write!(f, "spirallike(alpha={alpha}, beta={beta})")
            }
            FamilySpec::Ozaki { nu } => write!(f, "ozaki(nu={nu})"),
            FamilySpec::Robertson { lambda } => write!(f, "robertson(lambda={lambda})"),
        }
    }
}

/// Taylor coefficients `a2, a3, a4` of `f(z) = z + a2 z² + a3 z³ + a4 z⁴ + …`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffTriple {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
}

impl CoeffTriple {
    pub fn new(a2: Complex64, a3: Complex64, a4: Complex64) -> Self {
        Self { a2, a3, a4 }
    }

    pub fn from_real(a2: f64, a3: f64, a4: f64) -> Self {
        Self::new(a2.into(), a3.into(), a4.into())
    }

    /// The Koebe function `z/(1−z)²`.
    pub fn koebe() -> Self {
        Self::from_real(2.0, 3.0, 4.0)
    }

    pub fn is_finite(&self) -> bool {
        [self.a2, self.a3, self.a4].iter().all(|a| a.is_finite())
    }

    /// `f(z)/z = 1 + a2 z + a3 z² + a4 z³` as a series.
    pub fn f_over_z(&self, order: usize) -> PowerSeries {
        PowerSeries::new([Complex64::new(1.0, 0.0), self.a2, self.a3, self.a4], order)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            (self.a2 - other.a2).norm(),
            (self.a3 - other.a3).norm(),
            (self.a4 - other.a4).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// `(1−α) cos β e^{iβ}`, the exponent of the spirallike extremal function.
pub fn spirallike_weight(alpha: f64, beta: f64) -> Complex64 {
    Complex64::from_polar((1.0 - alpha) * beta.cos(), beta)
}

pub fn coeffs_closed_form(spec: &FamilySpec, c: &CTriple) -> Result<CoeffTriple> {
    spec.validate()?;
    let CTriple { c1, c2, c3 } = *c;
    let triple = match *spec {
        FamilySpec::Spirallike { alpha, beta } => {
            let w = spirallike_weight(alpha, beta);
            let w2 = w * w;
            CoeffTriple {
                a2: w * c1,
                a3: (w2 * c1 * c1 + w * c2) / 2.0,
                a4: (w2 * w * c1 * c1 * c1 + 3.0 * w2 * c1 * c2 + 2.0 * w * c3) / 6.0,
            }
        }
        FamilySpec::Ozaki { nu } => CoeffTriple {
            a2: -nu * c1 / 4.0,
            a3: nu * (nu * c1 * c1 - 2.0 * c2) / 24.0,
            a4: nu * (6.0 * nu * c1 * c2 - 8.0 * c3 - nu * nu * c1 * c1 * c1) / 192.0,
        },
        FamilySpec::Robertson { lambda } => {
            let m = 2.0 * lambda + 1.0;
            CoeffTriple {
                a2: m * c1 / 4.0,
                a3: m * (2.0 * c2 + m * c1 * c1) / 24.0,
                a4: m * (8.0 * c3 + 6.0 * m * c1 * c2 + m * m * c1 * c1 * c1) / 192.0,
            }
        }
    };
    Ok(triple)
}

/// Solves the defining relation for `a2, a3, a4` by matching powers of `z`.
pub fn coeffs_ode_oracle(spec: &FamilySpec, p: &PowerSeries) -> Result<CoeffTriple> {
    spec.validate()?;
    if (p.coeff(0) - 1.0).norm() > UNIT_TOL {
        return Err(Error::BranchUndefined(p.coeff(0)));
    }
    let zero = Complex64::new(0.0, 0.0);
    // a[n] is the coefficient of z^n in f; a[1] = 1.
    let mut a = [zero, Complex64::new(1.0, 0.0), zero, zero, zero];

    match *spec {
        FamilySpec::Spirallike { alpha, beta } => {
            // z f' = Q f with Q = e^{iβ} (((1−α) p + α) cos β − i sin β), Q(0) = 1
            let rot = Complex64::from_polar(1.0, beta);
            let q: Vec<Complex64> = (0..4)
                .map(|j| {
                    let pj = p.coeff(j);
                    let shifted = if j == 0 {
                        ((1.0 - alpha) * pj + alpha) * beta.cos() - Complex64::i() * beta.sin()
                    } else {
                        (1.0 - alpha) * pj * beta.cos()
                    };
                    rot * shifted
                })
                .collect();
            // n a_n = Σ_{j=0}^{n-1} Q_j a_{n-j}
            for n in 2..=4 {
                let rhs: Complex64 = (1..n).map(|j| q[j] * a[n - j]).sum();
                a[n] = rhs / (n as f64 - q[0]);
            }
        }
        FamilySpec::Ozaki { nu } => {
            // ν Σ_{j=1}^{m} c_j (m−j+1) a_{m−j+1} = −2 m (m+1) a_{m+1}
            for m in 1..=3 {
                let lhs: Complex64 = (1..=m)
                    .map(|j| p.coeff(j) * (m - j + 1) as f64 * a[m - j + 1])
                    .sum::<Complex64>()
                    * nu;
                a[m + 1] = -lhs / (2.0 * (m * (m + 1)) as f64);
            }
        }
        FamilySpec::Robertson { lambda } => {
            // m (m+1) a_{m+1} = (2λ+1)/2 Σ_{j=1}^{m} c_j (m−j+1) a_{m−j+1}
            let k = (2.0 * lambda + 1.0) / 2.0;
            for m in 1..=3 {
                let rhs: Complex64 = (1..=m)
                    .map(|j| p.coeff(j) * (m - j + 1) as f64 * a[m - j + 1])
                    .sum::<Complex64>()
                    * k;
                a[m + 1] = rhs / (m * (m + 1)) as f64;
            }
        }
    }
    Ok(CoeffTriple {
        a2: a[2],
        a3: a[3],
        a4: a[4],
    })
}

/// Critical point `s` of the extremal Carathéodory function
/// `(1 − z²)/(1 − 2 s z + z²)` for the Ozaki and Robertson classes.
pub fn s_critical(spec: &FamilySpec) -> Result<f64> {
    spec.validate()?;
    match *spec {
        FamilySpec::Spirallike { .. } => Err(Error::NotApplicable("s_critical")),
        FamilySpec::Ozaki { nu } => Ok((2.0 * (nu - 2.0) / (nu * nu + 8.0 * nu - 32.0)).sqrt()),
        FamilySpec::Robertson { lambda } => Ok((-2.0 * (2.0 * lambda + 3.0)
            / (4.0 * lambda * lambda - 12.0 * lambda - 39.0))
            .sqrt()),
    }
}

/// The Carathéodory function that generates the extremal member, when it is
/// of degree two: `(1 − z²)/(1 − 2 s z + z²)`, i.e. `p1 = s, p2 = −1`.
pub fn extremal_generator(spec: &FamilySpec) -> Result<Representative> {
    let s = s_critical(spec)?;
    rep_degree2(s.into(), Complex64::new(-1.0, 0.0))
}

pub fn extremal_coeffs(spec: &FamilySpec) -> Result<CoeffTriple> {
    spec.validate()?;
    let triple = match *spec {
        FamilySpec::Spirallike { alpha, beta } => {
            // f1(z)/z = (1 − z²)^{−w}
            let w = spirallike_weight(alpha, beta);
            let g = PowerSeries::from_real(&[1.0, 0.0, -1.0], DEFAULT_ORDER).pow_complex(-w)?;
            CoeffTriple::new(g.coeff(1), g.coeff(2), g.coeff(3))
        }
        FamilySpec::Ozaki { nu } => {
            let s = s_critical(spec)?;
            CoeffTriple::from_real(
                -nu * s / 2.0,
                nu * (1.0 + (nu - 2.0) * s * s) / 6.0,
                -nu * (nu - 2.0) * s * (3.0 + (nu - 4.0) * s * s) / 24.0,
            )
        }
        FamilySpec::Robertson { lambda } => {
            let s = s_critical(spec)?;
            let m = 2.0 * lambda + 1.0;
            CoeffTriple::from_real(
                m * s / 2.0,
                m * ((3.0 + 2.0 * lambda) * s * s - 1.0) / 6.0,
                m * (2.0 * lambda + 3.0) * ((2.0 * lambda + 5.0) * s * s - 3.0) * s / 24.0,
            )
        }
    };
    Ok(triple)
}

/// Sharp upper bound on `|H₂,₁(F_f/2)|` over the class.
pub fn sharp_bound(spec: &FamilySpec) -> Result<f64> {
    spec.validate()?;
    let bound = match *spec {
        FamilySpec::Spirallike { alpha, beta } => ((1.0 - alpha) * beta.cos()).powi(2) / 4.0,
        FamilySpec::Ozaki { nu } => {
            let nu2 = nu * nu;
            nu2 * (nu2 + 12.0 * nu - 44.0) / (192.0 * (nu2 + 8.0 * nu - 32.0))
        }
        FamilySpec::Robertson { lambda } => {
            let l2 = lambda * lambda;
            (2.0 * lambda + 1.0).powi(2) * (12.0 * l2 - 60.0 * lambda - 165.0)
                / (576.0 * (4.0 * l2 - 12.0 * lambda - 39.0))
        }
    };
    Ok(bound)
}

/// Margin by which the extremal member satisfies its class condition at `z`.
///
/// Positive means the strict inequality defining the class holds there.
/// Spirallike evaluates `z f1'/f1 = 1 + 2 w z²/(1 − z²)` from `f1` itself;
/// the other two classes evaluate `z f''/f'` through their generator.
pub fn extremal_margin(spec: &FamilySpec, z: Complex64) -> Result<f64> {
    spec.validate()?;
    use crate::caratheodory::CaratheodoryFunction;
    let one = Complex64::new(1.0, 0.0);
    let margin = match *spec {
        FamilySpec::Spirallike { alpha, beta } => {
            let w = spirallike_weight(alpha, beta);
            let z2 = z * z;
            let log_deriv = one + 2.0 * w * z2 / (one - z2);
            (Complex64::from_polar(1.0, -beta) * log_deriv).re - alpha * beta.cos()
        }
        FamilySpec::Ozaki { nu } => {
            let p = extremal_generator(spec)?.eval(z);
            let curvature = one - nu / 2.0 * (p - one);
            1.0 + nu / 2.0 - curvature.re
        }
        FamilySpec::Robertson { lambda } => {
            let p = extremal_generator(spec)?.eval(z);
            let curvature = one + (2.0 * lambda + 1.0) / 2.0 * (p - one);
            curvature.re - (0.5 - lambda)
        }
    };
    Ok(margin)
}
