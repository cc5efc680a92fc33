//! Global maximisation of `|H₂,₁(F_f/2)|` over the Carathéodory parameters.
//!
//! Rotation invariance lets `c1 = 2 p1` be real with `p1 ∈ [0, 1]`. For fixed
//! `(p1, p2)` every class gives
//!
//! ```text
//! H₂,₁ = scale · (e0 + e1 p2 + e2 p2² + e3 (1 − |p2|²) p3)
//! ```
//!
//! with `e3 >= 0`, so the supremum over `|p3| <= 1` is attained by the
//! unimodular `p3` aligned with `e0 + e1 p2 + e2 p2²`
//! ([`value_p3_optimal`]). What remains is a search over `p1` and `p2`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::caratheodory::SchurParams;
use crate::error::{Error, Result};
use crate::families::{sharp_bound, FamilySpec};

pub const DEFAULT_COARSE: usize = 128;
pub const DEFAULT_REFINE_ROUNDS: usize = 3;
/// Each refinement round divides the grid steps by this factor.
pub const SHRINK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub scale: f64,
    pub e0: f64,
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

impl Envelope {
    /// `scale · (e0 + e1 p2 + e2 p2² + e3 (1 − |p2|²) p3)`.
    pub fn evaluate(&self, p2: Complex64, p3: Complex64) -> Complex64 {
        self.scale * (self.quadratic(p2) + self.e3 * (1.0 - p2.norm_sqr()) * p3)
    }

    fn quadratic(&self, p2: Complex64) -> Complex64 {
        self.e0 + p2 * (self.e1 + self.e2 * p2)
    }
}

pub fn envelope(spec: &FamilySpec, p1: f64) -> Result<Envelope> {
    spec.validate()?;
    if !(0.0..=1.0).contains(&p1) {
        return Err(Error::OutOfRange {
            name: "p1",
            value: p1,
            range: "[0, 1]",
        });
    }
    let x2 = p1 * p1;
    let x4 = x2 * x2;
    let q = 1.0 - x2;
    let env = match *spec {
        FamilySpec::Spirallike { alpha, beta } => Envelope {
            scale: ((1.0 - alpha) * beta.cos()).powi(2) / 12.0,
            e0: x4,
            e1: 2.0 * q * x2,
            e2: -q * (3.0 + x2),
            e3: 4.0 * p1 * q,
        },
        FamilySpec::Ozaki { nu } => Envelope {
            scale: nu * nu / 2304.0,
            e0: (-nu * nu - 4.0 * nu + 8.0) * x4,
            e1: 4.0 * (4.0 - nu) * q * x2,
            e2: -8.0 * (2.0 + x2) * q,
            e3: 24.0 * p1 * q,
        },
        FamilySpec::Robertson { lambda } => Envelope {
            scale: (2.0 * lambda + 1.0).powi(2) / 2304.0,
            e0: (-4.0 * lambda * lambda + 4.0 * lambda + 11.0) * x4,
            e1: 4.0 * (2.0 * lambda + 5.0) * q * x2,
            e2: -8.0 * (x2 + 2.0) * q,
            e3: 24.0 * p1 * q,
        },
    };
    Ok(env)
}

/// `max_{|p3| <= 1} |H₂,₁|` for fixed `(p1, p2)`.
pub fn value_p3_optimal(env: &Envelope, p2: Complex64) -> f64 {
    env.scale * (env.quadratic(p2).norm() + env.e3 * (1.0 - p2.norm_sqr()))
}

/// The unimodular `p3` attaining [`value_p3_optimal`].
pub fn optimal_p3(env: &Envelope, p2: Complex64) -> Complex64 {
    let w = env.quadratic(p2);
    if w.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        w / w.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridInfo {
    pub coarse: usize,
    pub refine_rounds: usize,
    pub shrink: usize,
    /// Final step sizes in `p1`, `|p2|` and `arg p2`.
    pub final_steps: [f64; 3],
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub family: FamilySpec,
    pub max_abs_h21: f64,
    pub argmax: SchurParams,
    /// `arg p2` of the argmax in `[0, 2π)`.
    pub argmax_phase: f64,
    pub bound: f64,
    pub gap: f64,
    pub grid: GridInfo,
}

/// Candidate in `(p1, |p2|, arg p2)` coordinates.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    p1: f64,
    r: f64,
    phi: f64,
}

impl Candidate {
    fn better_than(&self, other: &Option<Candidate>) -> bool {
        other.is_none_or(|o| self.value > o.value)
    }
}

fn reduce_in_order(parts: Vec<Option<Candidate>>) -> Option<Candidate> {
    parts.into_iter().fold(None, |best, part| match part {
        Some(c) if c.better_than(&best) => Some(c),
        _ => best,
    })
}

/// Scans the tensor grid `p1s × rs × phis`, partitioned along `p1`.
///
/// Ties keep the earliest node (smallest `p1`, then `|p2|`, then phase).
fn scan(spec: &FamilySpec, p1s: &[f64], rs: &[f64], phis: &[f64]) -> Result<Option<Candidate>> {
    let units: Vec<Complex64> = phis
        .iter()
        .map(|&phi| Complex64::from_polar(1.0, phi))
        .collect();
    let parts = p1s
        .par_iter()
        .map(|&p1| -> Result<Option<Candidate>> {
            let env = envelope(spec, p1)?;
            let mut best: Option<Candidate> = None;
            for &r in rs {
                for (&phi, &u) in phis.iter().zip(&units) {
                    let value = value_p3_optimal(&env, u * r);
                    let cand = Candidate { value, p1, r, phi };
                    if cand.better_than(&best) {
                        best = Some(cand);
                    }
                }
            }
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(reduce_in_order(parts))
}

fn window(center: f64, step: f64, lo: f64, hi: f64) -> Vec<f64> {
    let half = SHRINK as isize;
    (-half..=half)
        .map(|k| center + step * k as f64)
        .filter(|&x| x >= lo && x <= hi)
        .collect()
}

pub fn global_max(spec: &FamilySpec, coarse: usize, refine_rounds: usize) -> Result<SearchReport> {
    spec.validate()?;
    if coarse < 64 {
        return Err(Error::InvalidParameter(format!("coarse = {coarse} < 64")));
    }
    if refine_rounds < 2 {
        return Err(Error::InvalidParameter(format!(
            "refine_rounds = {refine_rounds} < 2"
        )));
    }

    let n = coarse as f64;
    let p1s: Vec<f64> = (0..=coarse).map(|i| i as f64 / n).collect();
    let rs = p1s.clone();
    let phis: Vec<f64> = (0..coarse).map(|k| TAU * k as f64 / n).collect();
    let mut evaluations = p1s.len() * rs.len() * phis.len();
    let mut best = scan(spec, &p1s, &rs, &phis)?.expect("non-empty grid");

    let mut steps = [1.0 / n, 1.0 / n, TAU / n];
    for _ in 0..refine_rounds {
        let fine = steps.map(|s| s / SHRINK as f64);
        let p1s = window(best.p1, fine[0], 0.0, 1.0);
        let rs = window(best.r, fine[1], 0.0, 1.0);
        let phis: Vec<f64> = window(best.phi, fine[2], f64::NEG_INFINITY, f64::INFINITY)
            .into_iter()
            .map(|phi| phi.rem_euclid(TAU))
            .collect();
        evaluations += p1s.len() * rs.len() * phis.len();
        if let Some(cand) = scan(spec, &p1s, &rs, &phis)? {
            if cand.value > best.value {
                best = cand;
            }
        }
        steps = fine;
    }

    let p2 = Complex64::from_polar(best.r, best.phi);
    let env = envelope(spec, best.p1)?;
    let p3 = optimal_p3(&env, p2);
    let bound = sharp_bound(spec)?;
    Ok(SearchReport {
        family: *spec,
        max_abs_h21: best.value,
        argmax: SchurParams::new(best.p1, p2, p3)?,
        argmax_phase: best.phi,
        bound,
        gap: bound - best.value,
        grid: GridInfo {
            coarse,
            refine_rounds,
            shrink: SHRINK,
            final_steps: steps,
            evaluations,
        },
    })
}

/// Which parameter a sweep varies; the spirallike sweep varies α at fixed β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepFamily {
    Spirallike { beta: f64 },
    Ozaki,
    Robertson,
}

impl SweepFamily {
    pub fn spec(&self, value: f64) -> Result<FamilySpec> {
        match *self {
            SweepFamily::Spirallike { beta } => FamilySpec::spirallike(value, beta),
            SweepFamily::Ozaki => FamilySpec::ozaki(value),
            SweepFamily::Robertson => FamilySpec::robertson(value),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Increasing,
    Decreasing,
    Constant,
    Mixed,
}

impl Trend {
    pub fn of(values: &[f64]) -> Trend {
        let pairs = || values.windows(2);
        if pairs().all(|w| w[0] == w[1]) {
            Trend::Constant
        } else if pairs().all(|w| w[1] > w[0]) {
            Trend::Increasing
        } else if pairs().all(|w| w[1] < w[0]) {
            Trend::Decreasing
        } else {
            Trend::Mixed
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Trend::Increasing => "increasing",
            Trend::Decreasing => "decreasing",
            Trend::Constant => "constant",
            Trend::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub reports: Vec<SearchReport>,
    /// Monotonicity of the sharp bound along the sweep order.
    pub bound_trend: Trend,
}

/// Runs [`global_max`] for each parameter value. All values are validated
/// before any search starts.
pub fn sweep(
    family: SweepFamily,
    values: &[f64],
    coarse: usize,
    refine_rounds: usize,
) -> Result<SweepReport> {
    let specs = values
        .iter()
        .map(|&v| family.spec(v))
        .collect::<Result<Vec<_>>>()?;
    let reports = specs
        .iter()
        .map(|spec| global_max(spec, coarse, refine_rounds))
        .collect::<Result<Vec<_>>>()?;
    let bounds: Vec<f64> = reports.iter().map(|r| r.bound).collect();
    Ok(SweepReport {
        bound_trend: Trend::of(&bounds),
        reports,
    })
}
