mod common;

use std::f64::consts::{PI, TAU};

use loghankel::families::{coeffs_closed_form, s_critical};
use loghankel::search::{envelope, global_max, sweep, value_p3_optimal, SweepFamily, Trend};
use loghankel::{c_from_params, h21, FamilyTag};
use num_complex::Complex64;
use rand::Rng;

/// Best of `samples` equispaced unimodular `p3`, followed by a ternary search
/// on the arc around the best sample.
fn sampled_max(env: &loghankel::search::Envelope, p2: Complex64, samples: usize) -> (f64, f64) {
    let f = |t: f64| env.evaluate(p2, Complex64::from_polar(1.0, t)).norm();
    let step = TAU / samples as f64;
    let (k, coarse) =
        (0..samples)
            .map(|k| (k, f(step * k as f64)))
            .fold((0, f64::NEG_INFINITY), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            });
    let (mut lo, mut hi) = (step * (k as f64 - 1.0), step * (k as f64 + 1.0));
    for _ in 0..100 {
        let (m1, m2) = (lo + (hi - lo) / 3.0, hi - (hi - lo) / 3.0);
        if f(m1) < f(m2) {
            lo = m1
        } else {
            hi = m2
        }
    }
    (coarse, f(0.5 * (lo + hi)).max(coarse))
}

#[test]
fn p3_elimination_matches_sampling() {
    let mut rng = common::rng(51);
    let samples = 4096;
    // a sample at angular distance <= π/4096 from the optimum loses at most
    // |p3 term| (1 − cos(π/4096))
    let phase_loss = 1.0 - (PI / samples as f64).cos();
    for i in 0..1000 {
        let spec = common::spec(common::TAGS[i % 3], &mut rng);
        let env = envelope(&spec, rng.gen_range(0.0..=1.0)).unwrap();
        let p2 = common::disk(&mut rng);
        let (sampled, refined) = sampled_max(&env, p2, samples);
        let exact = value_p3_optimal(&env, p2);
        let p3_term = env.scale * env.e3 * (1.0 - p2.norm_sqr());
        assert!(sampled <= exact + 1e-15);
        assert!(
            (exact - sampled).abs() <= 1e-9 + p3_term * phase_loss,
            "{spec}: {exact} vs {sampled}"
        );
        assert!(
            (exact - refined).abs() <= 1e-9,
            "{spec}: {exact} vs refined {refined}"
        );
    }
}

#[test]
fn envelope_matches_coefficient_pipeline() {
    let mut rng = common::rng(52);
    for i in 0..1000 {
        let spec = common::spec(common::TAGS[i % 3], &mut rng);
        let params = common::schur_params(&mut rng);
        let env = envelope(&spec, params.p1).unwrap();
        let via_envelope = env.evaluate(params.p2, params.p3).norm();
        let a = coeffs_closed_form(&spec, &c_from_params(&params)).unwrap();
        let via_coeffs = h21(&a).norm();
        assert!(
            (via_envelope - via_coeffs).abs() <= 1e-10,
            "{spec} {params:?}"
        );
    }
}

#[test]
fn search_is_sound_and_sharp() {
    let mut rng = common::rng(53);
    for tag in common::TAGS {
        for _ in 0..10 {
            let spec = common::spec(tag, &mut rng);
            let report = global_max(&spec, 128, 3).unwrap();
            assert!(
                report.gap >= -1e-9,
                "{spec}: exceeded bound by {}",
                -report.gap
            );
            assert!(report.gap <= 5e-4, "{spec}: gap {}", report.gap);
        }
    }
}

#[test]
fn argmax_sits_at_the_extremal_generator() {
    let mut rng = common::rng(54);
    for tag in [FamilyTag::Ozaki, FamilyTag::Robertson] {
        for _ in 0..5 {
            let spec = common::spec(tag, &mut rng);
            let report = global_max(&spec, 128, 3).unwrap();
            let s = s_critical(&spec).unwrap();
            assert!(
                (report.argmax.p1 - s).abs() <= 2e-3,
                "{spec}: p1 {} vs {s}",
                report.argmax.p1
            );
            assert!(
                (report.argmax.p2.norm() - 1.0).abs() <= 2e-3,
                "{spec}: {:?}",
                report.argmax
            );
            assert!(
                (report.argmax_phase - PI).abs() <= 2e-3,
                "{spec}: phase {}",
                report.argmax_phase
            );
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let spec = common::spec(FamilyTag::Robertson, &mut common::rng(55));
    let a = global_max(&spec, 96, 2).unwrap();
    let b = global_max(&spec, 96, 2).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.max_abs_h21.to_bits(), b.max_abs_h21.to_bits());
}

#[test]
fn sweep_examples() {
    let r = sweep(
        SweepFamily::Spirallike { beta: 0.0 },
        &[0.0, 0.25, 0.5],
        64,
        2,
    )
    .unwrap();
    let bounds: Vec<f64> = r.reports.iter().map(|x| x.bound).collect();
    for (b, want) in bounds.iter().zip([0.25, 0.140625, 0.0625]) {
        assert!((b - want).abs() < 1e-15);
    }
    assert_eq!(r.bound_trend, Trend::Decreasing);

    let r = sweep(SweepFamily::Robertson, &[0.5, 1.0], 64, 2).unwrap();
    assert!((r.reports[0].bound - 0.030303).abs() < 5e-7);
    assert!((r.reports[1].bound - 0.070811).abs() < 5e-7);
    assert_eq!(r.bound_trend, Trend::Increasing);

    let r = sweep(SweepFamily::Ozaki, &[0.5, 1.0], 64, 2).unwrap();
    // ν²(ν²+12ν−44) / (192(ν²+8ν−32)) at ν = 1/2: 0.25·(−37.75)/(192·(−27.75))
    assert!((r.reports[0].bound - 0.25 * 37.75 / (192.0 * 27.75)).abs() < 1e-15);
    assert!((r.reports[1].bound - 31.0 / 4416.0).abs() < 1e-15);
    for rep in &r.reports {
        assert!(rep.gap >= -1e-9 && rep.gap <= 5e-4);
    }
}
