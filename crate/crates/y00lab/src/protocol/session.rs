//! End-to-end encryption/decryption sessions.

use rand::Rng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use super::keystream::{KeystreamGenerator, SecretKey, StreamDomain};
use super::{bob_demodulate, decrypt_osk, encrypt_slot, ProtocolParams, SlotRecord};
use crate::error::{Error, Result};
use crate::quantum::helstrom_binary_pure;
use crate::quantum::CoherentAmplitude;
use crate::rng::stream_rng;

/// Receiver channel model for the legitimate link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelModel {
    /// Bit-exact transmission; Bob's sample is the ideal ±|α|.
    Noiseless,
    /// Homodyne receiver: in-phase sample ±|α| + N(0, 1/4) in the keyed
    /// frame, giving the analytic bit error rate Φ(−2|α|).
    Homodyne,
    /// Ideal binary channel at the Helstrom error probability for the
    /// antipodal pair {|α⟩, |−α⟩}.
    Helstrom,
}

impl ChannelModel {
    /// Analytic per-bit error probability of the model at amplitude α.
    pub fn analytic_ber(&self, alpha_mag: f64) -> f64 {
        match self {
            ChannelModel::Noiseless => 0.0,
            ChannelModel::Homodyne => crate::metrics::normal_cdf(-2.0 * alpha_mag),
            ChannelModel::Helstrom => {
                let a = CoherentAmplitude {
                    re: alpha_mag,
                    im: 0.0,
                };
                let b = CoherentAmplitude {
                    re: -alpha_mag,
                    im: 0.0,
                };
                helstrom_binary_pure(a, b, 0.5).unwrap_or(0.5)
            }
        }
    }
}

/// Full record of one session: slot-by-slot encryption data plus Bob's
/// decoded bits. Immutable once produced.
#[derive(Debug, Clone, PartialEq)]
pub struct SessionTranscript {
    records: Vec<SlotRecord>,
    bob_bits: Vec<u8>,
}

impl SessionTranscript {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[SlotRecord] {
        &self.records
    }

    /// Bob's decoded plaintext bits (post OSK removal).
    pub fn bob_bits(&self) -> &[u8] {
        &self.bob_bits
    }

    /// Number of slots where Bob's decoded bit differs from the data bit.
    pub fn bit_errors(&self) -> usize {
        self.records
            .iter()
            .zip(&self.bob_bits)
            .filter(|(r, &b)| r.x != b)
            .count()
    }

    /// Serialize as CSV: `t,x,m,osk,xy00,j,theta,bob_bit` with theta to
    /// 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,m,osk,xy00,j,theta,bob_bit\n");
        for (r, &b) in self.records.iter().zip(&self.bob_bits) {
            out.push_str(&format!(
                "{},{},{},{},{},{},{:.11e},{}\n",
                r.t, r.x, r.m, r.osk_bit, r.x_y00, r.j, r.theta, b
            ));
        }
        out
    }
}

fn channel_sample(
    rec: &SlotRecord,
    params: &ProtocolParams,
    channel: ChannelModel,
    rng: &mut ChaCha12Rng,
) -> f64 {
    // Ideal rotated in-phase value: +|α| on branch 0, −|α| on branch 1.
    let branch = rec.j / params.m as u32;
    let ideal = if branch == 0 {
        params.alpha_mag
    } else {
        -params.alpha_mag
    };
    match channel {
        ChannelModel::Noiseless => ideal,
        ChannelModel::Homodyne => {
            // Quadrature variance 1/4 (σ = 1/2).
            ideal + 0.5 * crate::rng::standard_normal(rng)
        }
        ChannelModel::Helstrom => {
            let p = channel.analytic_ber(params.alpha_mag);
            if rng.gen::<f64>() < p {
                -ideal
            } else {
                ideal
            }
        }
    }
}

/// Run a full encryption/decryption session.
///
/// PRNG-1 and PRNG-2 derive from `key` (domain-separated); channel noise
/// derives from `seed`. The same `(key, params, plaintext, seed)` always
/// produces a bit-identical transcript.
pub fn run_session(
    key: &SecretKey,
    plaintext: &[u8],
    params: &ProtocolParams,
    channel: ChannelModel,
    seed: u64,
) -> Result<SessionTranscript> {
    params.validate()?;
    if plaintext.iter().any(|&b| b > 1) {
        return Err(Error::domain("plaintext bits must be 0 or 1"));
    }

    let n = plaintext.len();
    let mut basis_gen = KeystreamGenerator::new(&params.basis_keystream, key, StreamDomain::Basis)?;
    let running_keys = super::derive_running_keys(&mut basis_gen, n, params.m)?;
    let osk_bits: Vec<u8> = if params.osk_enabled {
        let mut osk_gen = KeystreamGenerator::new(&params.osk_keystream, key, StreamDomain::Osk)?;
        osk_gen.take_bits(n)
    } else {
        vec![0u8; n]
    };

    let mut channel_rng = stream_rng(seed, "channel", 0);
    let mut records = Vec::with_capacity(n);
    let mut bob_bits = Vec::with_capacity(n);
    for t in 0..n {
        let mut rec = encrypt_slot(plaintext[t], running_keys[t], osk_bits[t], params)?;
        rec.t = t as u64;
        let sample = channel_sample(&rec, params, channel, &mut channel_rng);
        let xy00_hat = bob_demodulate(sample, rec.m, params)?;
        bob_bits.push(decrypt_osk(xy00_hat, rec.osk_bit));
        records.push(rec);
    }
    Ok(SessionTranscript { records, bob_bits })
}
