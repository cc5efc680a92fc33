mod common;

use loghankel::c_from_params;
use loghankel::caratheodory::{rep_degree1, rep_degree2, validate_caratheodory};
use num_complex::Complex64;
use rand::Rng;

#[test]
fn degree2_matches_parameterisation() {
    let mut rng = common::rng(11);
    for _ in 0..1000 {
        let params = common::schur_params(&mut rng);
        let series = rep_degree2(params.p1.into(), params.p2).unwrap().series();
        let c = c_from_params(&params);
        assert!((series.coeff(1) - c.c1).norm() <= 1e-12, "{params:?}");
        assert!((series.coeff(2) - c.c2).norm() <= 1e-12, "{params:?}");
    }
}

#[test]
fn parameterised_coefficients_stay_in_range() {
    let mut rng = common::rng(12);
    for _ in 0..100_000 {
        let params = common::schur_params(&mut rng);
        let c = c_from_params(&params);
        for cn in [c.c1, c.c2, c.c3] {
            assert!(cn.norm() <= 2.0 + 1e-12, "{params:?} -> {c:?}");
        }
    }
}

#[test]
fn representatives_have_positive_real_part() {
    let mut rng = common::rng(13);
    for i in 0..1000 {
        // alternate interior and unimodular parameters
        let p1 = if i % 2 == 0 {
            common::disk(&mut rng)
        } else {
            common::unimodular(&mut rng)
        };
        let rep = rep_degree1(p1).unwrap();
        assert!(validate_caratheodory(&rep, 0.999, 720), "degree1 {p1}");

        let p1 = common::disk(&mut rng) * rng.gen_range(0.0..=1.0);
        let p2 = if i % 2 == 0 {
            common::unimodular(&mut rng)
        } else {
            common::disk(&mut rng)
        };
        let rep = rep_degree2(p1, p2).unwrap();
        assert!(validate_caratheodory(&rep, 0.999, 720), "degree2 {p1} {p2}");
    }
}

#[test]
fn degree1_coefficients_are_geometric() {
    let p1 = Complex64::from_polar(0.8, 1.1);
    let s = rep_degree1(p1).unwrap().series();
    for n in 1..=s.order() {
        assert!((s.coeff(n) - 2.0 * p1.powu(n as u32)).norm() < 1e-14);
    }
}

#[test]
fn outside_disk_is_rejected() {
    assert!(rep_degree1(Complex64::new(0.0, 1.2)).is_err());
    assert!(rep_degree2(Complex64::new(0.2, 0.0), Complex64::new(1.1, 0.0)).is_err());
}
