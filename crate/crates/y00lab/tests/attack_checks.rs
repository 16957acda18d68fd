//! Attack-model checks: the known-plaintext masking band, window
//! soundness under the Gaussian observation model, and the Bob/Eve
//! receiver asymmetry.

mod common;

use common::binomial_3sigma;
use y00lab::attacks::{
    eve_data_error, gamma_masking, key_detection_y00, phase_noise_sigma, simulate_exhaustive_kpa,
    ExhaustiveConfig,
};
use y00lab::metrics::normal_cdf;
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;
use y00lab::quantum::helstrom_binary_pure;
use y00lab::quantum::CoherentAmplitude;

fn lfsr12_params(alpha: f64, osk: bool) -> ProtocolParams {
    ProtocolParams {
        m: 16,
        alpha_mag: alpha,
        osk_enabled: osk,
        basis_keystream: KeystreamKind::Lfsr {
            width: 12,
            taps: vec![12, 6, 4, 1],
        },
        osk_keystream: KeystreamKind::Lfsr {
            width: 12,
            taps: vec![12, 6, 4, 1],
        },
    }
}

#[test]
fn known_plaintext_band_without_osk() {
    // 12-bit key, M=16, α tuned so Γ=4, OSK off: the pick probability
    // at the canonical N = |K|/log2(M) known-plaintext slots sits within
    // 3σ of a factor-3 band around (Γ/2)^{−|K|/log2 M}.
    let params = lfsr12_params(1.455, false);
    let gamma = gamma_masking(&params).unwrap();
    assert_eq!(gamma.value(), 4);
    let target = key_detection_y00(12, 16, gamma, false).unwrap();
    assert!((target - 0.125).abs() < 1e-12);

    let trials = 6000;
    let (report, stats) = simulate_exhaustive_kpa(&ExhaustiveConfig {
        params,
        known_plaintext_len: 3, // |K|/log2(M)
        trials,
        seed: 321,
    })
    .unwrap();
    let slack = binomial_3sigma(report.empirical.max(1e-3), trials);
    let (lo, hi) = (target / 3.0, target * 3.0);
    assert!(
        report.empirical + slack >= lo && report.empirical - slack <= hi,
        "P_d = {} outside [{lo}, {hi}] ± {slack}",
        report.empirical
    );
    assert!(stats.true_key_retained > 0.0);
}

#[test]
fn retention_window_failure_tracks_the_gaussian_tail() {
    // The true key survives each slot exactly when its phase noise stays
    // inside the (Γ/2)·Δ window, so the retention rate over n slots must
    // match the Gaussian prediction erf(w/(σ√2))^n statistically.
    for (osk, seed) in [(false, 11u64), (true, 12u64)] {
        let params = lfsr12_params(1.455, osk);
        let gamma = gamma_masking(&params).unwrap().value() as f64;
        let delta = params.delta();
        let window = gamma / 2.0 * delta;
        let sigma = phase_noise_sigma(params.alpha_mag);
        let per_slot = statrs::function::erf::erf(window / (sigma * std::f64::consts::SQRT_2));
        let n = 4usize;
        let predicted = per_slot.powi(n as i32);

        let trials = 6000;
        let (_, stats) = simulate_exhaustive_kpa(&ExhaustiveConfig {
            params,
            known_plaintext_len: n,
            trials,
            seed,
        })
        .unwrap();
        let tol = binomial_3sigma(predicted, trials) + 0.01;
        assert!(
            (stats.true_key_retained - predicted).abs() < tol,
            "osk={osk}: retained {} vs predicted {predicted}",
            stats.true_key_retained
        );
    }
}

#[test]
fn bob_always_beats_eve_on_data() {
    // The receiver asymmetry: Bob's binary Helstrom error at amplitude α
    // is strictly below Eve's masked data error for α ≥ 0.5, M ≥ 4.
    for &alpha in &[0.5f64, 1.0, 2.0] {
        let a = CoherentAmplitude::new(alpha, 0.0).unwrap();
        let b = CoherentAmplitude::new(-alpha, 0.0).unwrap();
        let bob = helstrom_binary_pure(a, b, 0.5).unwrap();
        for m in [4usize, 16, 64] {
            let p = ProtocolParams {
                m,
                alpha_mag: alpha,
                osk_enabled: false,
                basis_keystream: KeystreamKind::Counter { nonce: 0 },
                osk_keystream: KeystreamKind::Counter { nonce: 0 },
            };
            let eve = eve_data_error(&p).unwrap();
            assert!(bob < eve, "α={alpha} M={m}: bob {bob} vs eve {eve}");
        }
    }
}

#[test]
fn bob_homodyne_also_beats_eve() {
    // Even with the realistic homodyne receiver Bob stays ahead.
    for &alpha in &[0.5f64, 1.0, 2.0] {
        let bob = normal_cdf(-2.0 * alpha);
        for m in [4usize, 16, 64] {
            let p = ProtocolParams {
                m,
                alpha_mag: alpha,
                osk_enabled: false,
                basis_keystream: KeystreamKind::Counter { nonce: 0 },
                osk_keystream: KeystreamKind::Counter { nonce: 0 },
            };
            let eve = eve_data_error(&p).unwrap();
            assert!(bob < eve, "α={alpha} M={m}: bob {bob} vs eve {eve}");
        }
    }
}
