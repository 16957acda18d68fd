//! The Y-00 encryption/decryption engine.
//!
//! A running key selects one of `M` antipodal phase bases per slot; the
//! data bit (optionally XOR-randomized by OSK) picks one of the basis'
//! two phases, placing each slot's coherent state on a `2M`-point
//! constellation. The keyed receiver rotates its reference frame per
//! slot and faces only a binary decision.

pub mod keystream;
pub mod session;

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quantum::CoherentAmplitude;
use keystream::KeystreamKind;

pub use keystream::{derive_running_keys, KeystreamGenerator, SecretKey, StreamDomain};
pub use session::{run_session, ChannelModel, SessionTranscript};

/// Full Y-00 configuration: basis count, amplitude, OSK switch, and the
/// keystream kinds for PRNG-1 (basis) and PRNG-2 (OSK).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProtocolParams {
    /// Number of communication bases (power of two, ≥ 2); the
    /// constellation has 2M points spaced Δ = π/M.
    pub m: usize,
    /// Coherent amplitude magnitude |α| > 0.
    #[serde(rename = "alpha")]
    pub alpha_mag: f64,
    /// Overlap selection keying: XOR-randomize the data bit with PRNG-2.
    #[serde(rename = "osk", default)]
    pub osk_enabled: bool,
    /// PRNG-1, the basis selector.
    #[serde(default = "default_basis_keystream")]
    pub basis_keystream: KeystreamKind,
    /// PRNG-2, the OSK bit source (domain-separated from PRNG-1).
    #[serde(default = "default_osk_keystream")]
    pub osk_keystream: KeystreamKind,
}

fn default_basis_keystream() -> KeystreamKind {
    KeystreamKind::Counter { nonce: 1 }
}

fn default_osk_keystream() -> KeystreamKind {
    KeystreamKind::Counter { nonce: 2 }
}

impl ProtocolParams {
    pub fn validate(&self) -> Result<()> {
        if !self.m.is_power_of_two() || self.m < 2 {
            return Err(Error::domain(format!(
                "M must be a power of two ≥ 2, got {}",
                self.m
            )));
        }
        if !self.alpha_mag.is_finite() || self.alpha_mag <= 0.0 {
            return Err(Error::domain(format!("alpha must be positive, got {}", self.alpha_mag)));
        }
        Ok(())
    }

    /// Phase grid step Δ = π/M.
    pub fn delta(&self) -> f64 {
        PI / self.m as f64
    }

    /// Basis phase θ_m = (m−1)·π/M for m ∈ {1..M}.
    pub fn basis_phase(&self, m: u32) -> f64 {
        (m as f64 - 1.0) * self.delta()
    }

    /// Total constellation size 2M.
    pub fn constellation_size(&self) -> usize {
        2 * self.m
    }

    /// Keystream bits consumed per slot by the basis selector.
    pub fn bits_per_slot(&self) -> usize {
        self.m.trailing_zeros() as usize
    }

    /// Phase of constellation point `j ∈ {0..2M−1}`.
    pub fn phase_of_index(&self, j: u32) -> f64 {
        j as f64 * self.delta()
    }
}

/// One encrypted slot: data bit, running key, OSK bit, the Y-00
/// plaintext (post-OSK bit), and the resulting constellation point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlotRecord {
    /// Slot index.
    pub t: u64,
    /// Data bit.
    pub x: u8,
    /// Running key value in {1..M}.
    pub m: u32,
    /// OSK keystream bit (0 when OSK is disabled).
    pub osk_bit: u8,
    /// Transmitted bit after OSK: x ⊕ osk when enabled, else x.
    pub x_y00: u8,
    /// Constellation index in {0..2M−1}; θ = j·π/M.
    pub j: u32,
    /// Transmitted phase in radians.
    pub theta: f64,
}

fn check_bit(b: u8, name: &str) -> Result<()> {
    if b > 1 {
        return Err(Error::domain(format!("{name} must be 0 or 1, got {b}")));
    }
    Ok(())
}

/// Antipodal branch carrying bit `b` in basis `m`: even bases map bit 0
/// to θ_m and bit 1 to θ_m+π, odd bases swap the assignment.
fn branch_for_bit(b: u8, m: u32) -> u8 {
    if m % 2 == 0 {
        b
    } else {
        1 - b
    }
}

/// Bit carried on branch `b` of basis `m` (the mapping is an involution).
fn bit_for_branch(b: u8, m: u32) -> u8 {
    branch_for_bit(b, m)
}

/// Constellation index carrying bit `x_y00` in basis `m` for a
/// constellation of `m_count` bases.
pub fn phase_index(x_y00: u8, m: u32, m_count: usize) -> u32 {
    (m - 1) + m_count as u32 * branch_for_bit(x_y00, m) as u32
}

/// Logical bit carried at constellation index `j` when OSK is disabled.
pub fn constellation_bit(j: u32, m_count: usize) -> u8 {
    let m = (j % m_count as u32) + 1;
    let branch = (j / m_count as u32) as u8;
    bit_for_branch(branch, m)
}

/// Encrypt one slot by modulation.
pub fn encrypt_slot(x: u8, m: u32, osk_bit: u8, params: &ProtocolParams) -> Result<SlotRecord> {
    check_bit(x, "data bit")?;
    check_bit(osk_bit, "OSK bit")?;
    if m < 1 || m as usize > params.m {
        return Err(Error::domain(format!(
            "running key {m} outside 1..={}",
            params.m
        )));
    }
    let x_y00 = if params.osk_enabled { x ^ osk_bit } else { x };
    let branch = branch_for_bit(x_y00, m);
    let j = (m - 1) + params.m as u32 * branch as u32;
    Ok(SlotRecord {
        t: 0,
        x,
        m,
        osk_bit: if params.osk_enabled { osk_bit } else { 0 },
        x_y00,
        j,
        theta: params.phase_of_index(j),
    })
}

/// Coherent amplitude transmitted for a slot: `|α|·e^{iθ}`.
pub fn modulate(rec: &SlotRecord, params: &ProtocolParams) -> CoherentAmplitude {
    CoherentAmplitude {
        re: params.alpha_mag * rec.theta.cos(),
        im: params.alpha_mag * rec.theta.sin(),
    }
}

/// The keyed receiver's decision from a frame-rotated in-phase sample.
///
/// Bob rotates his reference frame by −θ_m, so the signal lands at ±|α|
/// on the in-phase axis; the sign decision yields the antipodal branch
/// and the basis parity rule recovers the transmitted `x_y00`. The
/// caller removes OSK with [`decrypt_osk`].
pub fn bob_demodulate(inphase_sample: f64, m: u32, params: &ProtocolParams) -> Result<u8> {
    if m < 1 || m as usize > params.m {
        return Err(Error::domain(format!(
            "running key {m} outside 1..={}",
            params.m
        )));
    }
    let branch = if inphase_sample >= 0.0 { 0u8 } else { 1u8 };
    Ok(bit_for_branch(branch, m))
}

/// Undo OSK: XOR with the same keystream bit (involutive).
pub fn decrypt_osk(x_y00: u8, osk_bit: u8) -> u8 {
    x_y00 ^ osk_bit
}
