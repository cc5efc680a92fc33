mod common;

use std::f64::consts::{FRAC_PI_2, TAU};

use loghankel::families::{
    coeffs_closed_form, coeffs_ode_oracle, extremal_coeffs, extremal_margin, sharp_bound,
};
use loghankel::series::DEFAULT_ORDER;
use loghankel::{c_from_params, h21, FamilySpec, FamilyTag};
use num_complex::Complex64;

#[test]
fn closed_form_matches_oracle_componentwise() {
    let mut rng = common::rng(41);
    for tag in common::TAGS {
        for _ in 0..1000 {
            let spec = common::spec(tag, &mut rng);
            let c = c_from_params(&common::schur_params(&mut rng));
            let closed = coeffs_closed_form(&spec, &c).unwrap();
            let oracle = coeffs_ode_oracle(&spec, &c.to_series(DEFAULT_ORDER)).unwrap();
            assert!(
                closed.max_abs_diff(&oracle) <= 1e-10,
                "{spec}: {closed:?} vs {oracle:?}"
            );
            if tag == FamilyTag::Ozaki {
                assert!((closed.a2.norm() - oracle.a2.norm()).abs() <= 1e-10);
                assert!((closed.a3 - oracle.a3).norm() <= 1e-10);
                assert!((closed.a4.norm() - oracle.a4.norm()).abs() <= 1e-10);
                assert!((h21(&closed) - h21(&oracle)).norm() <= 1e-10);
            }
        }
    }
}

#[test]
fn oracle_uses_only_first_three_coefficients() {
    let mut rng = common::rng(42);
    let spec = common::spec(FamilyTag::Robertson, &mut rng);
    let c = c_from_params(&common::schur_params(&mut rng));
    let short = coeffs_ode_oracle(&spec, &c.to_series(3)).unwrap();
    let mut longer = c.to_series(DEFAULT_ORDER).coeffs().to_vec();
    longer[5] = Complex64::new(1.5, -0.5);
    let longer = loghankel::PowerSeries::new(longer, DEFAULT_ORDER);
    assert_eq!(short, coeffs_ode_oracle(&spec, &longer).unwrap());
}

#[test]
fn extremal_functions_attain_the_bound() {
    let mut rng = common::rng(43);
    for tag in common::TAGS {
        for _ in 0..50 {
            let spec = common::spec(tag, &mut rng);
            let e = extremal_coeffs(&spec).unwrap();
            let residual = (h21(&e).norm() - sharp_bound(&spec).unwrap()).abs();
            assert!(residual <= 1e-10, "{spec}: residual {residual}");
        }
    }
}

#[test]
fn spirallike_bound_shape() {
    let alphas: Vec<f64> = (0..20).map(|i| i as f64 * 0.049).collect();
    let betas: Vec<f64> = (0..20)
        .map(|j| -FRAC_PI_2 + (j as f64 + 0.5) * (FRAC_PI_2 / 10.0))
        .collect();
    for &beta in &betas {
        let mut previous = f64::INFINITY;
        for &alpha in &alphas {
            let b = sharp_bound(&FamilySpec::spirallike(alpha, beta).unwrap()).unwrap();
            assert!(b > 0.0);
            assert!(b < previous, "not decreasing at alpha={alpha}, beta={beta}");
            previous = b;
            let mirrored = sharp_bound(&FamilySpec::spirallike(alpha, -beta).unwrap()).unwrap();
            assert_eq!(b, mirrored);
        }
    }
}

#[test]
fn bounds_positive_on_ranges() {
    for k in 0..=100 {
        let t = k as f64 / 100.0;
        let nu = 1e-3 + t * (1.0 - 1e-3);
        assert!(sharp_bound(&FamilySpec::ozaki(nu).unwrap()).unwrap() > 0.0);
        let lambda = 0.5 + t * 0.5;
        assert!(sharp_bound(&FamilySpec::robertson(lambda).unwrap()).unwrap() > 0.0);
    }
}

#[test]
fn extremal_members_satisfy_class_condition() {
    let mut rng = common::rng(44);
    for tag in common::TAGS {
        for _ in 0..20 {
            let spec = common::spec(tag, &mut rng);
            for k in 0..360 {
                let z = Complex64::from_polar(0.999, TAU * k as f64 / 360.0);
                let margin = extremal_margin(&spec, z).unwrap();
                assert!(margin > -1e-6, "{spec} at {z}: {margin}");
            }
        }
    }
}

#[test]
fn sweep_specs_reject_out_of_range() {
    assert!(sharp_bound(&FamilySpec::Ozaki { nu: 1.5 }).is_err());
    assert!(extremal_coeffs(&FamilySpec::Robertson { lambda: 0.2 }).is_err());
    assert!(coeffs_closed_form(
        &FamilySpec::Spirallike {
            alpha: 1.0,
            beta: 0.0
        },
        &c_from_params(&loghankel::SchurParams::new(0.0, 0.0.into(), 0.0.into()).unwrap())
    )
    .is_err());
}
