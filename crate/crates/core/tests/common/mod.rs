#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, TAU};

use loghankel::{FamilySpec, FamilyTag, SchurParams};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the closed unit disk.
pub fn disk(rng: &mut impl Rng) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}

pub fn unimodular(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(0.0..TAU))
}

pub fn complex_box(rng: &mut impl Rng, half_width: f64) -> Complex64 {
    Complex64::new(
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
    )
}

pub fn schur_params(rng: &mut impl Rng) -> SchurParams {
    let p1 = rng.gen_range(0.0..=1.0);
    // put some mass on the boundary circles as well
    let p2 = if rng.gen_bool(0.2) {
        unimodular(rng)
    } else {
        disk(rng)
    };
    let p3 = if rng.gen_bool(0.5) {
        unimodular(rng)
    } else {
        disk(rng)
    };
    SchurParams::new(p1, p2, p3).unwrap()
}

pub fn spec(tag: FamilyTag, rng: &mut impl Rng) -> FamilySpec {
    match tag {
        FamilyTag::Spirallike => FamilySpec::spirallike(
            rng.gen_range(0.0..0.99),
            rng.gen_range(-FRAC_PI_2 + 1e-3..FRAC_PI_2 - 1e-3),
        )
        .unwrap(),
        FamilyTag::Ozaki => FamilySpec::ozaki(rng.gen_range(1e-3..=1.0)).unwrap(),
        FamilyTag::Robertson => FamilySpec::robertson(rng.gen_range(0.5..=1.0)).unwrap(),
    }
}

pub const TAGS: [FamilyTag; 3] = [
    FamilyTag::Spirallike,
    FamilyTag::Ozaki,
    FamilyTag::Robertson,
];
