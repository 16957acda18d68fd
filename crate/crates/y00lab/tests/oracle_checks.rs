//! Cross-checks of the Gram-matrix span path against the independent
//! Fock-truncation oracle, plus receiver-ordering and measurement-
//! optimality checks.

mod common;

use common::*;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use std::sync::Arc;
use y00lab::attacks::{eve_data_operators, AttackView};
use y00lab::metrics::eve_channel_holevo;
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;
use y00lab::quantum::{
    coherent_overlap, ensemble_spectrum, gram_matrix, helstrom_binary_pure,
    helstrom_projectors, holevo_condition_residual, holevo_information_mixed,
    srm_symmetric_error, von_neumann_entropy, CoherentAmplitude, SignalEnsemble, SpanBasis,
    SpanOperator,
};
use y00lab::rng::stream_rng;

fn params(m: usize, alpha: f64, osk: bool) -> ProtocolParams {
    ProtocolParams {
        m,
        alpha_mag: alpha,
        osk_enabled: osk,
        basis_keystream: KeystreamKind::Counter { nonce: 0 },
        osk_keystream: KeystreamKind::Counter { nonce: 0 },
    }
}

#[test]
fn overlap_matches_fock_inner_products() {
    // ⟨α|β⟩ against truncated Fock vectors (N=40), including the vacuum.
    let cases = [
        (CoherentAmplitude::new(1.0, 0.0).unwrap(), CoherentAmplitude::new(-1.0, 0.0).unwrap()),
        (CoherentAmplitude::vacuum(), CoherentAmplitude::new(2.0, 0.0).unwrap()),
        (CoherentAmplitude::new(0.7, -0.4).unwrap(), CoherentAmplitude::new(-0.2, 1.1).unwrap()),
    ];
    for (a, b) in cases {
        let va = fock_vector(a, 40);
        let vb = fock_vector(b, 40);
        let fock = (va.adjoint() * vb)[(0, 0)];
        let closed = coherent_overlap(a, b);
        assert!((closed - fock).norm() < 1e-12, "{a:?} vs {b:?}");
    }
}

#[test]
fn gram_of_small_ring_matches_fock() {
    // 4 states on the |α|=0.5 circle: every entry against Fock N=30.
    let ens = SignalEnsemble::ring(4, 0.5).unwrap();
    let g = gram_matrix(&ens);
    g.validate().unwrap();
    let vecs: Vec<_> = ens.amplitudes().iter().map(|a| fock_vector(*a, 30)).collect();
    for i in 0..4 {
        for j in 0..4 {
            let fock = (vecs[i].adjoint() * &vecs[j])[(0, 0)];
            assert!((g.entries()[(i, j)] - fock).norm() < 1e-12);
        }
    }
}

fn random_ensemble(rng: &mut impl Rng, max_l: usize, max_mag: f64) -> SignalEnsemble {
    let l = rng.gen_range(1..=max_l);
    let amplitudes: Vec<CoherentAmplitude> = (0..l)
        .map(|_| {
            let mag = rng.gen::<f64>() * max_mag;
            let phase = rng.gen::<f64>() * std::f64::consts::TAU;
            CoherentAmplitude::from_polar(mag, phase).unwrap()
        })
        .collect();
    let mut priors: Vec<f64> = (0..l).map(|_| rng.gen::<f64>() + 1e-3).collect();
    let sum: f64 = priors.iter().sum();
    for p in priors.iter_mut() {
        *p /= sum;
    }
    let drift: f64 = 1.0 - priors.iter().sum::<f64>();
    priors[0] += drift;
    SignalEnsemble::new(amplitudes, priors).unwrap()
}

#[test]
fn ensemble_spectra_match_fock_truncation() {
    // Wider than the acceptance sample: up to 32 states and |α| ≤ 3,
    // still within the N=60 truncation budget.
    let mut rng = stream_rng(2024, "gram-vs-fock", 0);
    for round in 0..12 {
        let ens = random_ensemble(&mut rng, 32, 3.0);
        let gram_path = ensemble_spectrum(&ens).unwrap();
        let fock_path = fock_spectrum(&ens, 60);
        for (i, lam) in gram_path.eigenvalues().iter().enumerate() {
            let f = fock_path.get(i).copied().unwrap_or(0.0);
            assert!((lam - f).abs() < 1e-8, "round {round}, eigenvalue {i}: {lam} vs {f}");
        }
        let chi_gram = von_neumann_entropy(&gram_path);
        let chi_fock = entropy_bits(&fock_path.iter().map(|&l| l.max(0.0)).collect::<Vec<_>>());
        assert!((chi_gram - chi_fock).abs() < 1e-7, "round {round}");
    }
}

#[test]
fn srm_error_matches_explicit_fock_operators() {
    // L=16, α=0.1: the DFT formula against explicit SRM operators (N=20).
    // √μ amplifies roundoff on near-zero ring eigenvalues, so the two
    // paths agree to ~1e-7 here, not machine precision.
    let formula = srm_symmetric_error(16, 0.1).unwrap();
    let explicit = fock_srm_error(16, 0.1, 20);
    assert!((formula - explicit).abs() < 5e-7, "{formula} vs {explicit}");
    assert!(formula > 0.0 && formula < 1.0 - 1.0 / 16.0);

    // And a couple more points across the range.
    for &(l, alpha) in &[(4usize, 0.5f64), (8, 1.0)] {
        let formula = srm_symmetric_error(l, alpha).unwrap();
        let explicit = fock_srm_error(l, alpha, 40);
        assert!((formula - explicit).abs() < 1e-9, "L={l} α={alpha}");
    }
}

#[test]
fn eve_data_error_gram_matches_fock_helstrom() {
    // M=2, α=0.1, OSK off: the Gram-path Helstrom value against the
    // Fock-truncation Helstrom (N=20) for the same sublattice mixtures.
    let p = params(2, 0.1, false);
    let gram_value = y00lab::attacks::eve_data_error(&p).unwrap();

    let two_m = 4;
    let delta = std::f64::consts::PI / 2.0;
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for j in 0..two_m {
        let amp = CoherentAmplitude::from_polar(0.1, j as f64 * delta).unwrap();
        if j % 2 == 0 {
            even.push(amp);
        } else {
            odd.push(amp);
        }
    }
    let w = vec![0.5, 0.5];
    let rho0 = fock_density(&even, &w, 20);
    let rho1 = fock_density(&odd, &w, 20);
    let fock_value = fock_helstrom(&rho0, &rho1, 0.5);
    assert!((gram_value - fock_value).abs() < 1e-8, "{gram_value} vs {fock_value}");
}

#[test]
fn data_conditionals_trace_distance_matches_fock() {
    let p = params(8, 0.7, false);
    let (rho0, rho1) = eve_data_operators(&p).unwrap();
    let gram_td = y00lab::quantum::trace_distance(&rho0, &rho1).unwrap();

    let delta = std::f64::consts::PI / 8.0;
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for j in 0..16 {
        let amp = CoherentAmplitude::from_polar(0.7, j as f64 * delta).unwrap();
        if j % 2 == 0 {
            even.push(amp)
        } else {
            odd.push(amp)
        }
    }
    let w = vec![1.0 / 8.0; 8];
    let f0 = fock_density(&even, &w, 40);
    let f1 = fock_density(&odd, &w, 40);
    // The sublattice difference operator lives mostly in weakly-occupied
    // span directions; Gram-side deflation at 1e-12 trims ~1e-9 of
    // trace-norm mass relative to the Fock path.
    let fock_td: f64 = hermitian_eigs(&(f1 - f0)).iter().map(|e| e.abs()).sum::<f64>() / 2.0;
    assert!((gram_td - fock_td).abs() < 1e-8, "{gram_td} vs {fock_td}");
}

fn hermitian_eigs(m: &DMatrix<Complex64>) -> Vec<f64> {
    y00lab::quantum::span::hermitian_eigenvalues(m)
}

#[test]
fn eve_channel_holevo_matches_fock_entropy() {
    // M=16, α=1, COA: χ_H against the Fock (N=40) von Neumann entropy.
    let p = params(16, 1.0, false);
    let chi = eve_channel_holevo(&p, AttackView::Coa).unwrap();
    let ring = SignalEnsemble::ring(32, 1.0).unwrap();
    let fock = entropy_bits(
        &fock_spectrum(&ring, 40)
            .iter()
            .map(|&l| l.max(0.0))
            .collect::<Vec<_>>(),
    );
    assert!((chi - fock).abs() < 1e-7, "{chi} vs {fock}");
}

#[test]
fn mixed_holevo_matches_fock() {
    // Data-group Holevo at M=16, α=1 via the union-span Gram method vs
    // Fock truncation.
    let delta = std::f64::consts::PI / 16.0;
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for j in 0..32 {
        let amp = CoherentAmplitude::from_polar(1.0, j as f64 * delta).unwrap();
        if j % 2 == 0 {
            even.push(amp)
        } else {
            odd.push(amp)
        }
    }
    let g0 = SignalEnsemble::uniform(even.clone()).unwrap();
    let g1 = SignalEnsemble::uniform(odd.clone()).unwrap();
    let chi = holevo_information_mixed(&[(g0, 0.5), (g1, 0.5)]).unwrap();

    let w = vec![1.0 / 16.0; 16];
    let f0 = fock_density(&even, &w, 40);
    let f1 = fock_density(&odd, &w, 40);
    let favg = (&f0 + &f1) * Complex64::new(0.5, 0.0);
    let s = |m: &DMatrix<Complex64>| {
        entropy_bits(&hermitian_eigs(m).iter().map(|&l| l.max(0.0)).collect::<Vec<_>>())
    };
    let fock_chi = s(&favg) - 0.5 * s(&f0) - 0.5 * s(&f1);
    assert!((chi - fock_chi).abs() < 1e-7, "{chi} vs {fock_chi}");
}

#[test]
fn helstrom_below_simulated_homodyne_everywhere() {
    // The receiver-ordering chain at α ∈ {0.5, 1, 2}: optimal quantum
    // detection beats the homodyne receiver, which beats guessing.
    use y00lab::protocol::{run_session, ChannelModel, SecretKey};
    let key = SecretKey::from_integer(0x3A7, 12).unwrap();
    for &alpha in &[0.5f64, 1.0, 2.0] {
        let a = CoherentAmplitude::new(alpha, 0.0).unwrap();
        let b = CoherentAmplitude::new(-alpha, 0.0).unwrap();
        let hel = helstrom_binary_pure(a, b, 0.5).unwrap();

        let p = params(4, alpha, false);
        let mut rng = stream_rng(77, "plaintext", alpha.to_bits());
        let n = 200_000usize;
        let bits: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1u8)).collect();
        let t = run_session(&key, &bits, &p, ChannelModel::Homodyne, 13).unwrap();
        let homodyne = t.bit_errors() as f64 / n as f64;

        let slack = binomial_3sigma(homodyne.max(1e-6), n as u64);
        assert!(hel < homodyne + slack, "α={alpha}: helstrom {hel} vs homodyne {homodyne}");
        assert!(homodyne < 0.5);
    }
}

#[test]
fn brute_force_measurement_grid_confirms_helstrom_optimality() {
    // Binary real-amplitude ensemble: sweep projective measurements by
    // angle, brute-force the mutual information, and confirm the
    // maximizer coincides with the Helstrom projectors, where the
    // stationarity residual vanishes.
    let a = CoherentAmplitude::new(0.8, 0.0).unwrap();
    let b = CoherentAmplitude::new(-0.8, 0.0).unwrap();
    let ens = SignalEnsemble::uniform(vec![a, b]).unwrap();
    let basis = Arc::new(SpanBasis::from_ensemble(&ens).unwrap());

    let mut c0 = DMatrix::<Complex64>::zeros(2, 2);
    c0[(0, 0)] = Complex64::new(1.0, 0.0);
    let mut c1 = DMatrix::<Complex64>::zeros(2, 2);
    c1[(1, 1)] = Complex64::new(1.0, 0.0);
    let rho0 = SpanOperator::density(basis.clone(), c0).unwrap();
    let rho1 = SpanOperator::density(basis.clone(), c1).unwrap();

    let states = [rho0.ortho_matrix(), rho1.ortho_matrix()];
    let mutual_info = |p0: &DMatrix<Complex64>, p1: &DMatrix<Complex64>| -> f64 {
        let mut cond = [[0.0f64; 2]; 2];
        for (i, s) in states.iter().enumerate() {
            cond[0][i] = (p0 * s).trace().re.max(1e-300);
            cond[1][i] = (p1 * s).trace().re.max(1e-300);
        }
        let mut info = 0.0;
        for j in 0..2 {
            let marginal = 0.5 * (cond[j][0] + cond[j][1]);
            for i in 0..2 {
                info += 0.5 * cond[j][i] * (cond[j][i] / marginal).log2();
            }
        }
        info
    };
    let projectors = |phi: f64| {
        let v = DMatrix::from_row_slice(
            2,
            1,
            &[
                Complex64::new(phi.cos(), 0.0),
                Complex64::new(phi.sin(), 0.0),
            ],
        );
        let p0 = &v * v.adjoint();
        let p1 = DMatrix::<Complex64>::identity(2, 2) - &p0;
        (p0, p1)
    };

    let mut best_phi = 0.0;
    let mut best_info = -1.0;
    for step in 0..2000 {
        let phi = step as f64 / 2000.0 * std::f64::consts::PI;
        let (p0, p1) = projectors(phi);
        let info = mutual_info(&p0, &p1);
        if info > best_info {
            best_info = info;
            best_phi = phi;
        }
    }

    // Helstrom projectors and their mutual information.
    let povm = helstrom_projectors(&rho0, &rho1, 0.5).unwrap();
    let hel_info = mutual_info(&povm[0].ortho_matrix(), &povm[1].ortho_matrix());
    assert!(
        hel_info >= best_info - 1e-6,
        "Helstrom info {hel_info} vs grid max {best_info} at φ={best_phi}"
    );

    let residual = holevo_condition_residual(&ens, &povm).unwrap();
    assert!(residual < 1e-8, "residual {residual}");
}
