mod common;

use common::close;
use empskit::classify::builders::weight_l_indices;
use empskit::classify::{
    build_state, classify_three_qubit, dicke, discriminate_noisy, generalized_dicke, ghz,
    noisy_ghz, noisy_w, polytope_membership_3q, slocc_orbit_sample, w_state, NoisyFamily,
    PolytopeClass, StateBuilderSpec, Verdict,
};
use empskit::random::{complex_gaussian, seeded};
use empskit::{emps_vector, eta_indicator, PureState};
use proptest::prelude::*;
use rand::Rng;

fn random_weights(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-3).collect();
    let s: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / s).collect()
}

#[test]
fn build_state_from_spec() {
    let d = build_state::<f64>(&StateBuilderSpec::Dicke { n: 3, l: 1 }).unwrap();
    assert_eq!(d.as_pure().unwrap(), &dicke::<f64>(3, 1).unwrap());
    let err = build_state::<f64>(&StateBuilderSpec::W {
        coeffs: vec![0.5, 0.2],
    })
    .unwrap_err();
    assert!(err.to_string().contains("sum"));
    let mixed = build_state::<f64>(&StateBuilderSpec::NoisyGhz { v: 0.3 }).unwrap();
    assert!(mixed.as_pure().is_none());
}

#[test]
fn noisy_discrimination_examples() {
    let r = discriminate_noisy(&noisy_w::<f64>(0.2).unwrap(), NoisyFamily::W(0.2)).unwrap();
    assert!(close(r.total, 1.1, 1e-12));
    let g = discriminate_noisy(&noisy_ghz::<f64>(0.7).unwrap(), NoisyFamily::Ghz(0.7)).unwrap();
    assert!(close(g.total, 1.5, 1e-12));
}

#[test]
fn ghz_orbit_contains_facet_violation_and_stays_in_ghz_polytope() {
    let g = ghz::<f64>(3, std::f64::consts::FRAC_PI_4).unwrap();
    let samples = slocc_orbit_sample(&g, 500, 42).unwrap();
    let mut any_above = emps_vector(&g).unwrap().total() > 1.0;
    for v in &samples {
        assert!(
            polytope_membership_3q(v, PolytopeClass::Ghz)
                .unwrap()
                .inside
        );
        any_above |= v.total() > 1.0;
    }
    assert!(any_above);
}

#[test]
fn w_orbit_stays_below_w_facet() {
    let w = dicke::<f64>(3, 1).unwrap();
    for v in slocc_orbit_sample(&w, 500, 42).unwrap() {
        assert!(v.total() <= 1.0 + 1e-9, "{v:?}");
        assert!(polytope_membership_3q(&v, PolytopeClass::W).unwrap().inside);
    }
}

#[test]
fn dicke_on_facet_generalized_below() {
    let mut rng = seeded(8);
    for n in 3..=6 {
        for l in 1..n {
            let facet = l.min(n - l) as f64;
            let d = dicke::<f64>(n, l).unwrap();
            assert!(close(emps_vector(&d).unwrap().total(), facet, 1e-9));
            let m = weight_l_indices(n, l).len();
            for _ in 0..20 {
                let raw: Vec<f64> = (0..m)
                    .map(|_| complex_gaussian::<f64, _>(&mut rng).re)
                    .collect();
                let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
                let coeffs: Vec<f64> = raw.iter().map(|x| x / norm).collect();
                let g = generalized_dicke::<f64>(n, l, &coeffs).unwrap();
                assert!(emps_vector(&g).unwrap().total() <= facet + 1e-9);
            }
        }
    }
}

#[test]
fn overlap_region_is_not_called_w() {
    // GHZ below the W facet lands in the same region as W states
    let theta = 0.5 * (1.0f64 / 3.0).sqrt().asin();
    let label = classify_three_qubit(&ghz::<f64>(3, theta).unwrap()).unwrap();
    assert_eq!(label.verdict, Verdict::WClass);
    assert!(label.verdict.is_genuinely_entangled());
}

#[test]
fn biseparable_builder_positions_classify() {
    for position in 1..=3 {
        let b = empskit::classify::biseparable::<f64>(0.6, 0.8, position).unwrap();
        let label = classify_three_qubit(&b).unwrap();
        assert_eq!(label.verdict, Verdict::Biseparable { cut: position });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ghz_formulas(n in 3usize..9, theta in 0.01f64..std::f64::consts::FRAC_PI_4) {
        let g = ghz::<f64>(n, theta).unwrap();
        let v = emps_vector(&g).unwrap();
        let s2 = theta.sin().powi(2);
        prop_assert!((v.total() - n as f64 * s2).abs() < 1e-9);
        prop_assert!((eta_indicator(&g).unwrap() - (n as f64 - 2.0) * s2).abs() < 1e-9);
    }

    #[test]
    fn ghz_above_threshold_is_certified(offset in 1e-6f64..1.0) {
        let lo = (1.0f64 / 3.0).sqrt().asin();
        let theta = lo + offset * (std::f64::consts::FRAC_PI_4 - lo);
        let label = classify_three_qubit(&ghz::<f64>(3, theta).unwrap()).unwrap();
        prop_assert_eq!(label.verdict, Verdict::GhzClass);
    }

    #[test]
    fn w_light_weights_on_facet(seed in any::<u64>(), n in 3usize..9) {
        let mut rng = seeded(seed);
        let mut a = random_weights(n, &mut rng);
        // keep every weight below 1/2
        while a.iter().any(|&x| x >= 0.5) {
            a = random_weights(n, &mut rng);
        }
        let w = w_state::<f64>(&a).unwrap();
        let v = emps_vector(&w).unwrap();
        prop_assert!((v.total() - 1.0).abs() < 1e-9);
        let amax = a.iter().cloned().fold(0.0, f64::max);
        prop_assert!((eta_indicator(&w).unwrap() - (1.0 - 2.0 * amax)).abs() < 1e-9);
    }

    #[test]
    fn w_heavy_weight(seed in any::<u64>(), n in 3usize..9, heavy in 0.51f64..0.99) {
        let mut rng = seeded(seed);
        let rest = random_weights(n - 1, &mut rng);
        let mut a = vec![heavy];
        a.extend(rest.iter().map(|x| x * (1.0 - heavy)));
        let w = w_state::<f64>(&a).unwrap();
        let v = emps_vector(&w).unwrap();
        prop_assert!((v.total() - 2.0 * (1.0 - heavy)).abs() < 1e-9);
        prop_assert!(eta_indicator(&w).unwrap().abs() < 1e-9);
    }

    #[test]
    fn orbit_samples_stay_in_class_polytope(seed in any::<u64>()) {
        let w = dicke::<f64>(3, 1).unwrap();
        for v in slocc_orbit_sample(&w, 20, seed).unwrap() {
            prop_assert!(polytope_membership_3q(&v, PolytopeClass::W).unwrap().min_slack() >= -1e-9);
        }
    }

    #[test]
    fn product_orbit(seed in any::<u64>()) {
        let psi = PureState::<f64>::from_bits("011").unwrap();
        for v in slocc_orbit_sample(&psi, 5, seed).unwrap() {
            prop_assert!(v.values().iter().all(|&e| e < 1e-9));
        }
    }
}
