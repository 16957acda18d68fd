//! Coherent-state amplitudes and inner products.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex amplitude labeling a coherent state of laser light.
///
/// The state `|α⟩` with `α = re + i·im` is a minimum-uncertainty field
/// state; distinct amplitudes are never orthogonal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherentAmplitude {
    pub re: f64,
    pub im: f64,
}

impl CoherentAmplitude {
    /// Build an amplitude, rejecting non-finite components.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::domain(format!(
                "coherent amplitude must be finite, got ({re}, {im})"
            )));
        }
        Ok(Self { re, im })
    }

    /// Amplitude `mag·e^{iθ}` on the phase plane.
    pub fn from_polar(mag: f64, theta: f64) -> Result<Self> {
        Self::new(mag * theta.cos(), mag * theta.sin())
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn magnitude(&self) -> f64 {
        self.as_complex().norm()
    }

    /// Vacuum state amplitude.
    pub fn vacuum() -> Self {
        Self { re: 0.0, im: 0.0 }
    }
}

/// Inner product `⟨a|b⟩ = exp(−|a|²/2 − |b|²/2 + a*·b)`.
///
/// The magnitude is `exp(−|a−b|²/2) ≤ 1`; it reaches 1 only when the
/// amplitudes coincide.
pub fn coherent_overlap(a: CoherentAmplitude, b: CoherentAmplitude) -> Complex64 {
    let za = a.as_complex();
    let zb = b.as_complex();
    let exponent = za.conj() * zb - Complex64::new(0.5 * (za.norm_sqr() + zb.norm_sqr()), 0.0);
    exponent.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(CoherentAmplitude::new(f64::NAN, 0.0).is_err());
        assert!(CoherentAmplitude::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn self_overlap_is_one() {
        let a = CoherentAmplitude::new(1.3, -0.4).unwrap();
        let o = coherent_overlap(a, a);
        assert!((o.re - 1.0).abs() < 1e-14);
        assert!(o.im.abs() < 1e-14);
    }

    #[test]
    fn antipodal_overlap_matches_frozen_fock_value() {
        // |⟨α|−α⟩| for α=1; value frozen from the Fock-truncation oracle
        // (N=40), which reproduces e^{−2}.
        let a = CoherentAmplitude::new(1.0, 0.0).unwrap();
        let b = CoherentAmplitude::new(-1.0, 0.0).unwrap();
        let o = coherent_overlap(a, b);
        assert!((o.re - 0.1353352832366127).abs() < 1e-12);
        assert!(o.im.abs() < 1e-15);
    }

    #[test]
    fn vacuum_overlap_matches_frozen_fock_value() {
        // ⟨0|β⟩ for β=2 is e^{−2}; same frozen oracle value as above.
        let o = coherent_overlap(
            CoherentAmplitude::vacuum(),
            CoherentAmplitude::new(2.0, 0.0).unwrap(),
        );
        assert!((o.re - 0.1353352832366127).abs() < 1e-12);
        assert!(o.im.abs() < 1e-15);
    }

    #[test]
    fn overlap_magnitude_bounded_by_one() {
        let pts = [(0.0, 0.0), (0.5, 0.5), (-2.0, 1.0), (3.0, -0.1)];
        for &(ar, ai) in &pts {
            for &(br, bi) in &pts {
                let a = CoherentAmplitude::new(ar, ai).unwrap();
                let b = CoherentAmplitude::new(br, bi).unwrap();
                assert!(coherent_overlap(a, b).norm() <= 1.0 + 1e-12);
            }
        }
    }
}
