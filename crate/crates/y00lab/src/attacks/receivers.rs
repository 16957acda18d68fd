//! Eve's data and key receivers.

use std::f64::consts::PI;
use std::sync::Arc;

use super::{heterodyne_sample, AttackView};
use crate::error::{Error, Result};
use crate::protocol::ProtocolParams;
use crate::quantum::{helstrom_binary, srm_symmetric_error, CoherentAmplitude, SpanBasis, SpanOperator};
use crate::rng::stream_rng;

/// The two data-conditioned density operators an eavesdropper faces,
/// as span operators on the full 2M-point constellation.
///
/// With OSK off these are the doubly symmetric mixed states: the two
/// interleaved M-point sublattices (even and odd constellation indices),
/// each an M-fold-symmetric ring, rotated by Δ relative to one another —
/// the structure in which neighboring points carry opposite data bits.
/// With OSK on both conditionals are the uniform mixture over all 2M
/// points, so they coincide exactly.
pub fn eve_data_operators(params: &ProtocolParams) -> Result<(SpanOperator, SpanOperator)> {
    params.validate()?;
    let two_m = params.constellation_size();
    let basis = Arc::new(SpanBasis::ring(two_m, params.alpha_mag)?);

    let (w0, w1) = if params.osk_enabled {
        let w = vec![1.0 / two_m as f64; two_m];
        (w.clone(), w)
    } else {
        let mut w0 = vec![0.0; two_m];
        let mut w1 = vec![0.0; two_m];
        for j in 0..two_m {
            if j % 2 == 0 {
                w0[j] = 1.0 / params.m as f64;
            } else {
                w1[j] = 1.0 / params.m as f64;
            }
        }
        (w0, w1)
    };
    Ok((
        SpanOperator::mixture(basis.clone(), &w0)?,
        SpanOperator::mixture(basis, &w1)?,
    ))
}

/// Eve's minimum average error probability on the data bit.
///
/// OSK on makes the two conditionals identical, so the error is exactly
/// 1/2; OSK off evaluates the Helstrom bound for the doubly symmetric
/// mixed-state pair.
pub fn eve_data_error(params: &ProtocolParams) -> Result<f64> {
    params.validate()?;
    if params.osk_enabled {
        return Ok(0.5);
    }
    let (rho0, rho1) = eve_data_operators(params)?;
    helstrom_binary(&rho0, &rho1, 0.5)
}

/// Receiver family for running-key attacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyReceiver {
    /// Heterodyne measurement followed by angular nearest-neighbor
    /// decision on the relevant phase grid (Monte Carlo).
    HeterodyneMary,
    /// Square-root measurement on the symmetric constellation (analytic).
    Srm,
}

/// Eve's average error probability on the running key.
///
/// The KPA view decides among the M phases that remain once the data bit
/// is known (spacing 2π/M); the COA view decides among all 2M phases.
pub fn eve_key_receiver_error(
    params: &ProtocolParams,
    receiver: KeyReceiver,
    view: AttackView,
    trials: u64,
    seed: u64,
) -> Result<f64> {
    params.validate()?;
    if trials == 0 {
        return Err(Error::domain("key-receiver evaluation needs trials ≥ 1"));
    }
    let l = match view {
        AttackView::Kpa => params.m,
        AttackView::Coa => params.constellation_size(),
    };
    match receiver {
        KeyReceiver::Srm => srm_symmetric_error(l, params.alpha_mag),
        KeyReceiver::HeterodyneMary => {
            let mut rng = stream_rng(seed, "eve-key-receiver", 0);
            let mut rng_draw = stream_rng(seed, "eve-key-draw", 0);
            let spacing = 2.0 * PI / l as f64;
            let mut errors = 0u64;
            for _ in 0..trials {
                let k = (rand::Rng::gen_range(&mut rng_draw, 0..l as u64)) as usize;
                let phase = k as f64 * spacing;
                let state = CoherentAmplitude {
                    re: params.alpha_mag * phase.cos(),
                    im: params.alpha_mag * phase.sin(),
                };
                let z = heterodyne_sample(state, &mut rng).z;
                let measured = z.arg().rem_euclid(2.0 * PI);
                let decided = (measured / spacing).round() as usize % l;
                if decided != k {
                    errors += 1;
                }
            }
            Ok(errors as f64 / trials as f64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attacks::gamma_masking;
    use crate::protocol::keystream::KeystreamKind;
    use crate::quantum::trace_distance;

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
    fn osk_on_gives_exactly_half() {
        for m in [2usize, 16, 64] {
            for alpha in [0.1, 1.0] {
                assert_eq!(eve_data_error(&params(m, alpha, true)).unwrap(), 0.5);
            }
        }
    }

    #[test]
    fn osk_on_conditionals_coincide() {
        let (rho0, rho1) = eve_data_operators(&params(16, 1.0, true)).unwrap();
        assert!(trace_distance(&rho0, &rho1).unwrap() <= 1e-10);
    }

    #[test]
    fn large_m_masks_the_data() {
        // For M ≫ 1 the data error approaches 1/2.
        let e = eve_data_error(&params(64, 1.0, false)).unwrap();
        assert!(e > 0.499, "got {e}");
        assert!(e <= 0.5);
    }

    #[test]
    fn data_error_monotone_in_m_and_alpha() {
        let mut prev = 0.0;
        for m in [2usize, 4, 8, 16, 32, 64] {
            let e = eve_data_error(&params(m, 1.0, false)).unwrap();
            assert!(e + 1e-12 >= prev, "M={m}: {e} < {prev}");
            prev = e;
        }
        let mut prev = 1.0;
        for alpha in [0.2, 0.5, 1.0, 2.0, 3.0] {
            let e = eve_data_error(&params(8, alpha, false)).unwrap();
            assert!(e <= prev + 1e-12, "α={alpha}: {e} > {prev}");
            prev = e;
        }
    }

    #[test]
    fn resolvable_binary_key_is_easy() {
        let e = eve_key_receiver_error(
            &params(2, 8.0, false),
            KeyReceiver::HeterodyneMary,
            AttackView::Kpa,
            20_000,
            3,
        )
        .unwrap();
        assert!(e < 1e-3, "got {e}");
    }

    #[test]
    fn srm_at_zero_amplitude_is_guessing() {
        let p = params(8, 1e-12, false);
        // α must stay positive for validation; 1e-12 is numerically zero.
        let e = eve_key_receiver_error(&p, KeyReceiver::Srm, AttackView::Coa, 1, 0).unwrap();
        assert!((e - (1.0 - 1.0 / 16.0)).abs() < 1e-6);
    }

    #[test]
    fn zero_trials_is_a_domain_error() {
        let r = eve_key_receiver_error(
            &params(4, 1.0, false),
            KeyReceiver::HeterodyneMary,
            AttackView::Kpa,
            0,
            0,
        );
        assert!(r.is_err());
    }

    #[test]
    fn heterodyne_detection_tracks_inverse_gamma() {
        // M=1024, α=100 → Γ=3; single-slot detection within a factor 2
        // of 1/Γ (the claim is order-of-magnitude).
        let p = params(1024, 100.0, false);
        let gamma = gamma_masking(&p).unwrap().value() as f64;
        let err = eve_key_receiver_error(&p, KeyReceiver::HeterodyneMary, AttackView::Kpa, 100_000, 5)
            .unwrap();
        let detect = 1.0 - err;
        assert!(detect >= 1.0 / (2.0 * gamma) && detect <= 2.0 / gamma, "detect={detect}");
    }
}
