//! Key-detection probabilities and exhaustive key search.
//!
//! The mathematical-cipher baseline detects the key with probability
//! `2^{−(|K|−n)}`, reaching 1 at `n = |K|` known plaintext bits. Under
//! quantum-noise masking the per-slot running-key ambiguity is `Γ/2`
//! (known plaintext) or `Γ` (OSK randomized), and the detection
//! probability plateaus instead of converging to 1.
//!
//! The Monte Carlo searcher observes each slot's phase through Gaussian
//! phase noise of scale `σ_θ = 1/(2|α|)` (the same scale that defines
//! Γ) and retains every candidate key whose implied phase sequence stays
//! within `(Γ/2)·Δ` of the observations: against the exact implied point
//! when the plaintext pins the parity, or against the nearer point of
//! the antipodal pair when OSK hides it.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::{gamma_masking, phase_noise_sigma, MaskingNumber};
use crate::error::{Error, Result};
use crate::protocol::keystream::{KeystreamGenerator, KeystreamKind, SecretKey, StreamDomain};
use crate::protocol::{phase_index, ProtocolParams};
use crate::rng::{standard_normal, stream_rng};

/// Correct-key detection probability of a conventional mathematical
/// cipher under exhaustive search with `n` known plaintext bits:
/// `2^{−(|K|−n)}`, and 1 once `n ≥ |K|`.
pub fn key_detection_math(keylen: u32, n: u32) -> f64 {
    if n >= keylen {
        1.0
    } else {
        (-(f64::from(keylen) - f64::from(n))).exp2()
    }
}

/// Key-detection probability of the masked cipher, independent of the
/// number of observed slots: base `Γ/2` (known plaintext) or `Γ` (OSK),
/// exponent `|K|/log₂M`.
///
/// With OSK off and `Γ < 2` the masking is void and the probability
/// degenerates to 1 (the mathematical-cipher endpoint).
pub fn key_detection_y00(keylen: u32, m: usize, gamma: MaskingNumber, osk: bool) -> Result<f64> {
    if !m.is_power_of_two() || m < 2 {
        return Err(Error::domain(format!("M must be a power of two ≥ 2, got {m}")));
    }
    let g = f64::from(gamma.value());
    let base = if osk { g } else { g / 2.0 };
    if base <= 1.0 {
        return Ok(1.0);
    }
    let exponent = f64::from(keylen) / (m as f64).log2();
    Ok((-exponent * base.log2()).exp2())
}

/// Attack family labels used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AttackKind {
    #[serde(rename = "coa-data")]
    CoaData,
    #[serde(rename = "kpa-key")]
    KpaKey,
    #[serde(rename = "coa-key")]
    CoaKey,
    #[serde(rename = "exhaustive")]
    Exhaustive,
}

/// Parameter snapshot embedded in every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsSnapshot {
    pub m: usize,
    pub alpha: f64,
    pub osk: bool,
    pub keylen: u32,
    pub gamma: u32,
}

/// Analytic-vs-empirical record of one attack evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttackReport {
    pub kind: AttackKind,
    pub analytic: f64,
    pub empirical: f64,
    pub trials: u64,
    pub ci95: f64,
    pub params: ParamsSnapshot,
}

impl AttackReport {
    /// One CSV row (fixed column order: kind, analytic, empirical,
    /// trials, ci95, m, alpha, osk, keylen, gamma).
    pub fn csv_row(&self) -> String {
        format!(
            "{},{:.12e},{:.12e},{},{:.12e},{},{},{},{},{}",
            match self.kind {
                AttackKind::CoaData => "coa-data",
                AttackKind::KpaKey => "kpa-key",
                AttackKind::CoaKey => "coa-key",
                AttackKind::Exhaustive => "exhaustive",
            },
            self.analytic,
            self.empirical,
            self.trials,
            self.ci95,
            self.params.m,
            self.params.alpha,
            self.params.osk,
            self.params.keylen,
            self.params.gamma,
        )
    }

    pub const CSV_HEADER: &'static str =
        "kind,analytic,empirical,trials,ci95,m,alpha,osk,keylen,gamma";
}

/// Exhaustive-search configuration over an enumerable LFSR key space.
#[derive(Debug, Clone)]
pub struct ExhaustiveConfig {
    pub params: ProtocolParams,
    /// Number of known-plaintext slots observed per trial.
    pub known_plaintext_len: usize,
    pub trials: u64,
    pub seed: u64,
}

/// Companion statistics to the exhaustive-search report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExhaustiveStats {
    /// Fraction of trials where the surviving set was exactly the true key.
    pub unique_probability: f64,
    /// Mean surviving-set size.
    pub mean_surviving: f64,
    /// Fraction of trials where the true key survived every slot window.
    pub true_key_retained: f64,
}

struct TrialOutcome {
    pick_success: f64,
    unique: bool,
    survivors: usize,
    true_retained: bool,
}

/// Monte Carlo exhaustive key search against heterodyne observations.
///
/// Per trial: run a session with a random (nonzero) LFSR key, give Eve a
/// noisy phase per slot, and keep the keys consistent with every
/// observation window. The report's `empirical` field is the success
/// probability of picking uniformly from the surviving set; the
/// companion stats carry the unique-identification rate.
pub fn simulate_exhaustive_kpa(cfg: &ExhaustiveConfig) -> Result<(AttackReport, ExhaustiveStats)> {
    cfg.params.validate()?;
    if cfg.trials == 0 {
        return Err(Error::domain("exhaustive search needs trials ≥ 1"));
    }
    if cfg.known_plaintext_len == 0 {
        return Err(Error::domain("exhaustive search needs at least one slot"));
    }
    let (width, _taps) = match &cfg.params.basis_keystream {
        KeystreamKind::Lfsr { width, taps } => (*width, taps.clone()),
        KeystreamKind::Counter { .. } => {
            return Err(Error::Refused(
                "exhaustive search requires an enumerable LFSR keystream".into(),
            ))
        }
    };
    if width > 16 {
        return Err(Error::Refused(format!(
            "key space 2^{width} exceeds the exhaustive-search cap of 2^16"
        )));
    }

    let m_count = cfg.params.m;
    let n = cfg.known_plaintext_len;
    let keys: u64 = (1u64 << width) - 1; // nonzero LFSR seeds
    let delta = cfg.params.delta();
    let gamma = gamma_masking(&cfg.params)?;
    let window = f64::from(gamma.value()) / 2.0 * delta;
    let sigma = phase_noise_sigma(cfg.params.alpha_mag);
    let osk = cfg.params.osk_enabled;

    // Candidate running keys do not depend on the trial: precompute the
    // whole key-to-sequence table once.
    let mut table: Vec<u16> = Vec::with_capacity(keys as usize * n);
    for k in 1..=keys {
        let key = SecretKey::from_integer(k, width as usize)?;
        let mut gen = KeystreamGenerator::new(&cfg.params.basis_keystream, &key, StreamDomain::Basis)?;
        let seq = crate::protocol::derive_running_keys(&mut gen, n, m_count)?;
        table.extend(seq.iter().map(|&m| m as u16));
    }

    let wrap = |d: f64| -> f64 {
        let r = d.rem_euclid(2.0 * PI);
        if r > PI {
            r - 2.0 * PI
        } else {
            r
        }
    };

    let outcomes: Vec<TrialOutcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(cfg.seed, "exhaustive-trial", trial);
            let true_key = rng.gen_range(1..=keys);
            let true_rows = &table[((true_key - 1) as usize * n)..((true_key as usize) * n)];

            let plaintext: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1u8)).collect();
            let osk_bits: Vec<u8> = if osk {
                let key = SecretKey::from_integer(true_key, width as usize).expect("valid key");
                let mut gen =
                    KeystreamGenerator::new(&cfg.params.osk_keystream, &key, StreamDomain::Osk)
                        .expect("valid OSK stream");
                gen.take_bits(n)
            } else {
                vec![0u8; n]
            };

            // Eve's per-slot phase observations.
            let observations: Vec<f64> = (0..n)
                .map(|t| {
                    let x_y00 = plaintext[t] ^ osk_bits[t];
                    let j = phase_index(x_y00, true_rows[t] as u32, m_count);
                    j as f64 * delta + sigma * standard_normal(&mut rng)
                })
                .collect();

            let mut survivors = 0usize;
            let mut true_retained = false;
            let mut unique_candidate = 0u64;
            for k in 1..=keys {
                let rows = &table[((k - 1) as usize * n)..(k as usize * n)];
                let mut alive = true;
                for t in 0..n {
                    let m = rows[t] as u32;
                    let ok = if osk {
                        // Parity is hidden: accept the nearer antipodal point.
                        let base = (m - 1) as f64 * delta;
                        let d0 = wrap(observations[t] - base).abs();
                        let d1 = wrap(observations[t] - base - PI).abs();
                        d0.min(d1) <= window
                    } else {
                        let j = phase_index(plaintext[t], m, m_count);
                        wrap(observations[t] - j as f64 * delta).abs() <= window
                    };
                    if !ok {
                        alive = false;
                        break;
                    }
                }
                if alive {
                    survivors += 1;
                    unique_candidate = k;
                    if k == true_key {
                        true_retained = true;
                    }
                }
            }

            TrialOutcome {
                pick_success: if true_retained {
                    1.0 / survivors as f64
                } else {
                    0.0
                },
                unique: survivors == 1 && unique_candidate == true_key,
                survivors,
                true_retained,
            }
        })
        .collect();

    let trials_f = cfg.trials as f64;
    let pick = outcomes.iter().map(|o| o.pick_success).sum::<f64>() / trials_f;
    let unique = outcomes.iter().filter(|o| o.unique).count() as f64 / trials_f;
    let mean_surviving = outcomes.iter().map(|o| o.survivors as f64).sum::<f64>() / trials_f;
    let retained = outcomes.iter().filter(|o| o.true_retained).count() as f64 / trials_f;
    let var = outcomes
        .iter()
        .map(|o| (o.pick_success - pick).powi(2))
        .sum::<f64>()
        / (trials_f - 1.0).max(1.0);
    let ci95 = 1.96 * (var / trials_f).sqrt();

    let analytic = key_detection_y00(u32::from(width), m_count, gamma, osk)?;
    let report = AttackReport {
        kind: AttackKind::Exhaustive,
        analytic,
        empirical: pick,
        trials: cfg.trials,
        ci95,
        params: ParamsSnapshot {
            m: m_count,
            alpha: cfg.params.alpha_mag,
            osk,
            keylen: u32::from(width),
            gamma: gamma.value(),
        },
    };
    let stats = ExhaustiveStats {
        unique_probability: unique,
        mean_surviving,
        true_key_retained: retained,
    };
    Ok((report, stats))
}
