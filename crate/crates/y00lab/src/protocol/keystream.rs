//! Keyed pseudorandom keystreams driving basis selection and OSK.
//!
//! Two generator families cover the laboratory's needs: a short LFSR
//! whose key space can be searched exhaustively, and a counter-mode
//! cryptographic stream for realistic runs. The same secret key feeds
//! both the basis stream (PRNG-1) and the OSK stream (PRNG-2); the two
//! are domain-separated so their outputs are uncorrelated.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Secret key as a bit sequence, immutable after creation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretKey {
    bits: Vec<u8>,
}

impl SecretKey {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::domain("secret key must have at least one bit"));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::domain("key bits must be 0 or 1"));
        }
        Ok(Self { bits })
    }

    /// Key of `len` bits taken from the low bits of `value`, MSB first.
    pub fn from_integer(value: u64, len: usize) -> Result<Self> {
        if len == 0 || len > 64 {
            return Err(Error::domain(format!("key length {len} out of range 1..=64")));
        }
        let bits = (0..len).map(|i| ((value >> (len - 1 - i)) & 1) as u8).collect();
        Self::from_bits(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Big-endian integer value of the first `n` bits.
    pub fn prefix_value(&self, n: usize) -> u64 {
        self.bits.iter().take(n).fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }
}

/// Which pseudorandom generator a keystream uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum KeystreamKind {
    /// Fibonacci LFSR with the given feedback polynomial exponents
    /// (e.g. `taps = [8, 6, 5, 4]` for x⁸+x⁶+x⁵+x⁴+1). The key seeds the
    /// register; the all-zero state is remapped to all-ones, so valid
    /// keys for exhaustive experiments are the nonzero seeds.
    Lfsr { width: u8, taps: Vec<u8> },
    /// Counter-mode cryptographic stream (ChaCha20 keyed by a hash of
    /// the secret key, the nonce, and the stream domain).
    Counter { nonce: u64 },
}

/// Logical role of a stream; separates PRNG-1 from PRNG-2 under the same
/// secret key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamDomain {
    Basis,
    Osk,
}

impl StreamDomain {
    fn label(self) -> &'static str {
        match self {
            StreamDomain::Basis => "prng-1/basis",
            StreamDomain::Osk => "prng-2/osk",
        }
    }

    /// Seed tweak for LFSR domain separation (masked to width; never
    /// zero for width ≥ 1).
    fn lfsr_tweak(self) -> u64 {
        match self {
            StreamDomain::Basis => 0,
            StreamDomain::Osk => 0xA5A5_A5A5_A5A5_A5A5,
        }
    }
}

enum StreamState {
    Lfsr {
        state: u64,
        mask: u64,
        width: u8,
        taps: Vec<u8>,
    },
    Counter {
        rng: ChaCha20Rng,
        buffer: u8,
        bits_left: u8,
    },
}

/// Deterministic bit stream: same (kind, key, domain) always yields the
/// identical output sequence.
pub struct KeystreamGenerator {
    state: StreamState,
}

impl KeystreamGenerator {
    pub fn new(kind: &KeystreamKind, key: &SecretKey, domain: StreamDomain) -> Result<Self> {
        let state = match kind {
            KeystreamKind::Lfsr { width, taps } => {
                let w = *width;
                if w == 0 || w > 63 {
                    return Err(Error::domain(format!("LFSR width {w} out of range 1..=63")));
                }
                if taps.is_empty() || taps.iter().any(|&t| t == 0 || t > w) {
                    return Err(Error::domain("LFSR taps must be polynomial exponents in 1..=width"));
                }
                if key.len() < w as usize {
                    return Err(Error::domain(format!(
                        "key has {} bits, LFSR width is {w}",
                        key.len()
                    )));
                }
                let mask = (1u64 << w) - 1;
                let mut state = (key.prefix_value(w as usize) ^ domain.lfsr_tweak()) & mask;
                if state == 0 {
                    state = mask;
                }
                StreamState::Lfsr {
                    state,
                    mask,
                    width: w,
                    taps: taps.clone(),
                }
            }
            KeystreamKind::Counter { nonce } => {
                let mut hasher = Sha256::new();
                hasher.update(b"y00lab-keystream");
                hasher.update([domain.label().len() as u8]);
                hasher.update(domain.label().as_bytes());
                hasher.update(nonce.to_le_bytes());
                hasher.update((key.len() as u64).to_le_bytes());
                hasher.update(key.bits());
                let mut seed = [0u8; 32];
                seed.copy_from_slice(&hasher.finalize());
                StreamState::Counter {
                    rng: ChaCha20Rng::from_seed(seed),
                    buffer: 0,
                    bits_left: 0,
                }
            }
        };
        Ok(Self { state })
    }

    /// Next keystream bit.
    ///
    /// An exhausted LFSR period simply wraps; the stream never fails.
    pub fn next_bit(&mut self) -> u8 {
        match &mut self.state {
            StreamState::Lfsr {
                state,
                mask,
                width,
                taps,
            } => {
                // Newest bit sits at bit 0, so the bit at position k−1 is
                // the value produced k steps ago; output the oldest.
                let out = ((*state >> (*width - 1)) & 1) as u8;
                let mut fb = 0u64;
                for &t in taps.iter() {
                    fb ^= (*state >> (t - 1)) & 1;
                }
                *state = ((*state << 1) | fb) & *mask;
                out
            }
            StreamState::Counter {
                rng,
                buffer,
                bits_left,
            } => {
                if *bits_left == 0 {
                    *buffer = (rng.next_u32() & 0xFF) as u8;
                    *bits_left = 8;
                }
                *bits_left -= 1;
                (*buffer >> *bits_left) & 1
            }
        }
    }

    /// Next `count` bits.
    pub fn take_bits(&mut self, count: usize) -> Vec<u8> {
        (0..count).map(|_| self.next_bit()).collect()
    }
}

/// Running keys `m ∈ {1..M}` for `n` slots.
///
/// Consumes `log₂(M)` keystream bits per slot, chunked big-endian (most
/// significant bit first).
pub fn derive_running_keys(gen: &mut KeystreamGenerator, n: usize, m: usize) -> Result<Vec<u32>> {
    if !m.is_power_of_two() || m < 2 {
        return Err(Error::domain(format!("M must be a power of two ≥ 2, got {m}")));
    }
    let bits_per_slot = m.trailing_zeros() as usize;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut v = 0u32;
        for _ in 0..bits_per_slot {
            v = (v << 1) | gen.next_bit() as u32;
        }
        out.push(v + 1);
    }
    Ok(out)
}
