//! Eve's-channel Holevo capacity and generalized unicity-distance lower
//! bounds.

use serde::{Deserialize, Serialize};

use crate::attacks::AttackView;
use crate::error::{Error, Result};
use crate::metrics::normal_cdf;
use crate::protocol::ProtocolParams;
use crate::quantum::{ring_spectrum, von_neumann_entropy};

/// Below this many bits per slot the unicity bound is flagged infinite.
pub const CHI_FLOOR: f64 = 1e-9;

/// Holevo capacity of the channel from the running key to Eve's
/// observations, in bits per slot.
///
/// Known-plaintext view: the M basis states that remain once the data
/// bit is fixed — one point per basis, spacing 2π/M around the full
/// circle. Ciphertext-only view: the uniform 2M-point constellation.
/// Uniform priors are optimal for these symmetric rings.
pub fn eve_channel_holevo(params: &ProtocolParams, attack: AttackView) -> Result<f64> {
    params.validate()?;
    let l = match attack {
        AttackView::Kpa => params.m,
        AttackView::Coa => params.constellation_size(),
    };
    Ok(von_neumann_entropy(&ring_spectrum(l, params.alpha_mag)?))
}

/// Lower bound on the generalized unicity distance: key bits divided by
/// Eve's per-slot Holevo capacity. Flagged infinite when the capacity
/// is numerically zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnicityBound {
    pub keylen: u32,
    pub c1_bits_per_slot: f64,
    /// `None` means the bound is infinite (χ below [`CHI_FLOOR`]).
    pub bound_slots: Option<f64>,
    pub attack: AttackView,
}

impl UnicityBound {
    pub fn is_infinite(&self) -> bool {
        self.bound_slots.is_none()
    }
}

pub fn unicity_lower_bound(
    keylen: u32,
    params: &ProtocolParams,
    attack: AttackView,
) -> Result<UnicityBound> {
    if keylen == 0 {
        return Err(Error::domain("key length must be at least 1 bit"));
    }
    let chi = eve_channel_holevo(params, attack)?;
    let bound_slots = if chi > CHI_FLOOR {
        Some(f64::from(keylen) / chi)
    } else {
        None
    };
    Ok(UnicityBound {
        keylen,
        c1_bits_per_slot: chi,
        bound_slots,
        attack,
    })
}

/// One grid point of a randomization sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: usize,
    pub alpha: f64,
    pub chi: f64,
    pub bob_ber: f64,
    pub bound_slots: Option<f64>,
    pub feasible: bool,
}

/// Result of minimizing Eve's Holevo capacity over a parameter grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomizationSweep {
    pub rows: Vec<SweepRow>,
    /// Index into `rows` of the feasible point with minimum χ.
    pub best: Option<usize>,
    /// Populated when no grid point satisfies the constraint.
    pub violation: Option<String>,
}

impl RandomizationSweep {
    pub fn best_row(&self) -> Option<&SweepRow> {
        self.best.map(|i| &self.rows[i])
    }
}

/// Minimize Eve's channel capacity over a grid of protocol parameters,
/// subject to Bob's analytic homodyne BER staying at or below
/// `bob_ber_ceiling` (the no-degradation constraint).
pub fn optimize_randomization(
    keylen: u32,
    grid: &[ProtocolParams],
    attack: AttackView,
    bob_ber_ceiling: f64,
) -> Result<RandomizationSweep> {
    if grid.is_empty() {
        return Err(Error::domain("randomization grid is empty"));
    }
    let mut rows: Vec<SweepRow> = Vec::with_capacity(grid.len());
    let mut best: Option<usize> = None;
    for (i, params) in grid.iter().enumerate() {
        let chi = eve_channel_holevo(params, attack)?;
        let bob_ber = normal_cdf(-2.0 * params.alpha_mag);
        let feasible = bob_ber <= bob_ber_ceiling;
        let bound_slots = if chi > CHI_FLOOR {
            Some(f64::from(keylen) / chi)
        } else {
            None
        };
        if feasible {
            let better = match best {
                None => true,
                Some(b) => chi < rows[b].chi,
            };
            if better {
                best = Some(i);
            }
        }
        rows.push(SweepRow {
            m: params.m,
            alpha: params.alpha_mag,
            chi,
            bob_ber,
            bound_slots,
            feasible,
        });
    }
    let violation = if best.is_none() {
        Some(format!(
            "no grid point satisfies Bob BER ≤ {bob_ber_ceiling:.3e}; smallest achievable is {:.3e}",
            rows.iter().map(|r| r.bob_ber).fold(f64::INFINITY, f64::min)
        ))
    } else {
        None
    };
    Ok(RandomizationSweep {
        rows,
        best,
        violation,
    })
}
