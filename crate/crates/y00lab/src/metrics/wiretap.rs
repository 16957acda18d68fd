//! Wiretap and QKD comparison calculators: Wyner secrecy capacity,
//! the Pinsker bound, min-entropy bounds, and the Shannon-limit check.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// Gaussian wiretap secrecy capacity in bits per channel use:
/// `max(0, ½log₂(1+snr_b) − ½log₂(1+snr_e))`; zero when the Wyner
/// condition (Eve's channel noisier than Bob's) fails.
pub fn wyner_secrecy_capacity(snr_b: f64, snr_e: f64) -> Result<f64> {
    if !snr_b.is_finite() || !snr_e.is_finite() || snr_b < 0.0 || snr_e < 0.0 {
        return Err(Error::domain(format!("SNRs must be nonnegative, got ({snr_b}, {snr_e})")));
    }
    Ok((0.5 * ((1.0 + snr_b).log2() - (1.0 + snr_e).log2())).max(0.0))
}

/// Pinsker bound on statistical distance from leaked mutual information:
/// `d_c ≤ √(I/2)` with `I` in nats. The argument is declared in bits and
/// converted internally, since the classical inequality holds with
/// natural logarithms.
pub fn pinsker_bound(mutual_info_bits: f64) -> Result<f64> {
    if !mutual_info_bits.is_finite() || mutual_info_bits < 0.0 {
        return Err(Error::domain(format!(
            "mutual information must be nonnegative, got {mutual_info_bits}"
        )));
    }
    Ok((mutual_info_bits * LN_2 / 2.0).sqrt())
}

/// Asymptotic min-entropy lower bound `max(0, H(X) − χ)`.
pub fn minentropy_lower_bound(h_x: f64, chi: f64) -> Result<f64> {
    if !h_x.is_finite() || h_x < 0.0 || !chi.is_finite() || chi < 0.0 {
        return Err(Error::domain(format!("entropies must be nonnegative, got ({h_x}, {chi})")));
    }
    Ok((h_x - chi).max(0.0))
}

/// Whether an equivocation level escapes the Shannon impossibility bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShannonLimit {
    /// `H(X|Y) ≤ H(K)`: within the conventional-cipher bound.
    WithinLimit,
    /// `H(X|Y) > H(K)`: the impossibility theorem's premise is escaped.
    Lifted,
}

pub fn shannon_limit_check(h_x_given_y: f64, h_k: f64) -> Result<ShannonLimit> {
    if !h_x_given_y.is_finite() || h_x_given_y < 0.0 || !h_k.is_finite() || h_k < 0.0 {
        return Err(Error::domain("entropies must be nonnegative and finite"));
    }
    if h_x_given_y > h_k + 1e-12 {
        Ok(ShannonLimit::Lifted)
    } else {
        Ok(ShannonLimit::WithinLimit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wyner_pins() {
        assert_eq!(wyner_secrecy_capacity(3.0, 3.0).unwrap(), 0.0);
        // snr_b=15, snr_e=3 → ½(log₂16 − log₂4) = 1 bit.
        assert!((wyner_secrecy_capacity(15.0, 3.0).unwrap() - 1.0).abs() < 1e-15);
        // Wyner condition violated → clamped to zero.
        assert_eq!(wyner_secrecy_capacity(1.0, 9.0).unwrap(), 0.0);
    }

    #[test]
    fn wyner_monotonicity() {
        let c = wyner_secrecy_capacity(10.0, 2.0).unwrap();
        assert!(wyner_secrecy_capacity(12.0, 2.0).unwrap() > c);
        assert!(wyner_secrecy_capacity(10.0, 3.0).unwrap() < c);
    }

    #[test]
    fn pinsker_pins() {
        assert_eq!(pinsker_bound(0.0).unwrap(), 0.0);
        // 1 bit → √(ln2/2) ≈ 0.5887.
        assert!((pinsker_bound(1.0).unwrap() - 0.5887050112577373).abs() < 1e-12);
        // 2 nats (= 2/ln2 bits) → 1.
        assert!((pinsker_bound(2.0 / LN_2).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn minentropy_bound_clamps() {
        assert_eq!(minentropy_lower_bound(3.0, 0.0).unwrap(), 3.0);
        assert_eq!(minentropy_lower_bound(1.0, 2.5).unwrap(), 0.0);
        assert!((minentropy_lower_bound(1.0, 0.25).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn shannon_limit_pins() {
        assert_eq!(shannon_limit_check(3.0, 8.0).unwrap(), ShannonLimit::WithinLimit);
        assert_eq!(shannon_limit_check(9.0, 8.0).unwrap(), ShannonLimit::Lifted);
        assert_eq!(shannon_limit_check(8.0, 8.0).unwrap(), ShannonLimit::WithinLimit);
    }

    #[test]
    fn osk_equivocation_lifts_the_limit() {
        // Eve's per-bit error of 1/2 gives 1 bit of equivocation per
        // plaintext bit; any plaintext longer than the key lifts the
        // bound.
        let keylen = 16.0;
        let n = 1024.0;
        let h_x_given_y = n * 1.0;
        assert_eq!(
            shannon_limit_check(h_x_given_y, keylen).unwrap(),
            ShannonLimit::Lifted
        );
    }
}
