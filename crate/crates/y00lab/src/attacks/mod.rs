//! Eve's receivers and attack evaluations.
//!
//! Data attacks process the constellation as a binary source masked by
//! quantum noise; key attacks process it as an M-ary (known plaintext)
//! or 2M-ary (ciphertext only) source. Exhaustive key search couples a
//! heterodyne observation model to candidate-key consistency windows.

pub mod exhaustive;
pub mod receivers;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::protocol::ProtocolParams;
use crate::quantum::CoherentAmplitude;
use crate::rng::standard_normal;

pub use exhaustive::{
    key_detection_math, key_detection_y00, simulate_exhaustive_kpa, AttackKind, AttackReport,
    ExhaustiveConfig, ExhaustiveStats, ParamsSnapshot,
};
pub use receivers::{eve_data_error, eve_data_operators, eve_key_receiver_error, KeyReceiver};

/// Which key-channel view the eavesdropper processes: `M`-ary when the
/// plaintext is known, `2M`-ary for ciphertext only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttackView {
    Kpa,
    Coa,
}

/// Complex heterodyne measurement outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeterodyneSample {
    pub z: Complex64,
}

/// Draw a heterodyne outcome for a coherent state: the Husimi-Q density
/// `(1/π)·exp(−|z−α|²)`, i.e. independent Gaussian components with mean
/// `(Re α, Im α)` and variance 1/2 each.
pub fn heterodyne_sample(state: CoherentAmplitude, rng: &mut impl Rng) -> HeterodyneSample {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    HeterodyneSample {
        z: Complex64::new(
            state.re + s * standard_normal(rng),
            state.im + s * standard_normal(rng),
        ),
    }
}

/// Number of constellation points inside the quantum-noise masking
/// region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaskingNumber {
    gamma: u32,
}

impl MaskingNumber {
    pub fn new(gamma: u32, m: usize) -> Result<Self> {
        if gamma < 1 || gamma as usize > 2 * m {
            return Err(Error::domain(format!("Γ={gamma} outside 1..={}", 2 * m)));
        }
        Ok(Self { gamma })
    }

    pub fn value(&self) -> u32 {
        self.gamma
    }
}

/// Heterodyne phase-noise scale σ_θ = 1/(2|α|) used throughout the
/// masking model.
pub fn phase_noise_sigma(alpha_mag: f64) -> f64 {
    1.0 / (2.0 * alpha_mag)
}

/// Masking number Γ: the count of constellation points inside a ±1σ
/// heterodyne phase arc, `Γ = clamp(round(2σ_θ/(π/M)), 1, 2M)` with
/// `σ_θ = 1/(2|α|)`.
pub fn gamma_masking(params: &ProtocolParams) -> Result<MaskingNumber> {
    params.validate()?;
    let sigma = phase_noise_sigma(params.alpha_mag);
    let steps = (2.0 * sigma / params.delta()).round();
    let gamma = steps.max(1.0).min(2.0 * params.m as f64) as u32;
    MaskingNumber::new(gamma, params.m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::keystream::KeystreamKind;
    use crate::rng::stream_rng;

    fn params(m: usize, alpha: f64) -> ProtocolParams {
        ProtocolParams {
            m,
            alpha_mag: alpha,
            osk_enabled: false,
            basis_keystream: KeystreamKind::Counter { nonce: 0 },
            osk_keystream: KeystreamKind::Counter { nonce: 0 },
        }
    }

    #[test]
    fn heterodyne_moments_match_husimi_q() {
        // α=0: component means 0, variances 1/2, checked against the
        // Gaussian moment oracle at Monte Carlo precision.
        let mut rng = stream_rng(1, "het", 0);
        let n = 1_000_000;
        let (mut sum_re, mut sum_im, mut sq_re, mut sq_im) = (0.0, 0.0, 0.0, 0.0);
        for _ in 0..n {
            let s = heterodyne_sample(CoherentAmplitude::vacuum(), &mut rng);
            sum_re += s.z.re;
            sum_im += s.z.im;
            sq_re += s.z.re * s.z.re;
            sq_im += s.z.im * s.z.im;
        }
        let nf = n as f64;
        let tol_mean = 3.0 * (0.5f64 / nf).sqrt();
        assert!((sum_re / nf).abs() < tol_mean);
        assert!((sum_im / nf).abs() < tol_mean);
        assert!((sq_re / nf - 0.5).abs() < 0.005);
        assert!((sq_im / nf - 0.5).abs() < 0.005);
    }

    #[test]
    fn heterodyne_mean_tracks_amplitude() {
        let mut rng = stream_rng(2, "het", 0);
        let a = CoherentAmplitude::new(3.0, 0.0).unwrap();
        let n = 100_000;
        let mean: f64 = (0..n).map(|_| heterodyne_sample(a, &mut rng).z.re).sum::<f64>() / n as f64;
        assert!((mean - 3.0).abs() < 3.0 * (0.5f64 / n as f64).sqrt());
    }

    #[test]
    fn heterodyne_stream_is_reproducible() {
        let a = CoherentAmplitude::new(1.0, 0.5).unwrap();
        let mut r1 = stream_rng(7, "het", 3);
        let mut r2 = stream_rng(7, "het", 3);
        for _ in 0..32 {
            assert_eq!(heterodyne_sample(a, &mut r1).z, heterodyne_sample(a, &mut r2).z);
        }
    }

    #[test]
    fn gamma_formula_pins() {
        // M=1024, α=100: σ_θ=0.005, spacing≈0.0030680 → round(3.2595)=3.
        let g = gamma_masking(&params(1024, 100.0)).unwrap();
        assert_eq!(g.value(), 3);

        // Huge amplitude: clamp floor 1.
        let g = gamma_masking(&params(16, 1e6)).unwrap();
        assert_eq!(g.value(), 1);

        // Vanishing amplitude: clamp ceiling 2M.
        let g = gamma_masking(&params(16, 1e-9)).unwrap();
        assert_eq!(g.value(), 32);
    }
}
