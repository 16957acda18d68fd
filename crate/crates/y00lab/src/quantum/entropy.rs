//! Density-operator spectra and entropy functionals.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::ensemble::SignalEnsemble;
use super::span::{hermitian_eigenvalues, SpanBasis, SpanOperator};
use crate::error::{Error, Result};
use std::sync::Arc;

/// Eigenvalues of a density operator, descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Accept a density-operator spectrum: entries ≥ −1e-10 are clipped
    /// into [0, 1] and renormalized; drift beyond 1e-9 is a numeric error.
    pub fn try_density(mut eigenvalues: Vec<f64>) -> Result<Self> {
        let mut sum = 0.0;
        for e in eigenvalues.iter_mut() {
            if !e.is_finite() {
                return Err(Error::numeric("non-finite eigenvalue in spectrum"));
            }
            if *e < -1e-10 {
                return Err(Error::numeric(format!("spectrum eigenvalue {e} below tolerance")));
            }
            *e = e.clamp(0.0, 1.0);
            sum += *e;
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::numeric(format!(
                "spectrum mass {sum} drifted more than 1e-9 from 1"
            )));
        }
        if sum > 0.0 {
            for e in eigenvalues.iter_mut() {
                *e /= sum;
            }
        }
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(Self { eigenvalues })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }
}

/// Spectrum of the ensemble's average density operator `ρ_T = Σ ξ_k ρ_k`.
///
/// Computed as the eigenvalues of `D^{1/2} G D^{1/2}` (`D` the prior
/// diagonal, `G` the Gram matrix), which equal the nonzero eigenvalues of
/// `ρ_T` exactly — no Fock cutoff involved.
pub fn ensemble_spectrum(ens: &SignalEnsemble) -> Result<Spectrum> {
    let g = super::ensemble::gram_matrix(ens);
    let l = ens.len();
    let sqrt_p: Vec<f64> = ens.priors().iter().map(|p| p.sqrt()).collect();
    let m = DMatrix::from_fn(l, l, |i, j| {
        g.entries()[(i, j)] * Complex64::new(sqrt_p[i] * sqrt_p[j], 0.0)
    });
    Spectrum::try_density(hermitian_eigenvalues(&m))
}

/// Spectrum of a uniform symmetric ring ensemble via the circulant DFT
/// path; identical to [`ensemble_spectrum`] on the same ring.
pub fn ring_spectrum(l: usize, alpha_mag: f64) -> Result<Spectrum> {
    let mu = super::span::ring_gram_eigenvalues(l, alpha_mag)?;
    Spectrum::try_density(mu.into_iter().map(|m| m / l as f64).collect())
}

/// Von Neumann entropy in bits: `−Σ λ log₂ λ` with `0·log 0 = 0`.
pub fn von_neumann_entropy(spectrum: &Spectrum) -> f64 {
    -spectrum
        .eigenvalues()
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| l * l.log2())
        .sum::<f64>()
}

/// Holevo information of a pure-state ensemble, in bits.
///
/// For pure constituents `I_H = S(ρ_T) − Σ ξ_k S(ρ_k) = S(ρ_T)`; grouped
/// mixed constituents are handled by [`holevo_information_mixed`].
pub fn holevo_information(ens: &SignalEnsemble) -> Result<f64> {
    Ok(von_neumann_entropy(&ensemble_spectrum(ens)?))
}

/// Holevo information of a mixture of sub-ensembles, in bits.
///
/// Each group `(sub-ensemble, group prior)` contributes a mixed state
/// `ρ_k`; the result is `S(ρ_T) − Σ ξ_k S(ρ_k)` with every spectrum
/// computed by the Gram method. Group priors must sum to 1.
pub fn holevo_information_mixed(groups: &[(SignalEnsemble, f64)]) -> Result<f64> {
    if groups.is_empty() {
        return Err(Error::domain("no groups supplied"));
    }
    let total: f64 = groups.iter().map(|(_, p)| p).sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::domain(format!("group priors sum to {total}")));
    }

    // Union ensemble: concatenate states with joint priors.
    let mut amplitudes = Vec::new();
    let mut priors = Vec::new();
    for (sub, gp) in groups {
        for (a, p) in sub.amplitudes().iter().zip(sub.priors()) {
            amplitudes.push(*a);
            priors.push(gp * p);
        }
    }
    let union = SignalEnsemble::new(amplitudes, priors)?;
    let s_total = von_neumann_entropy(&ensemble_spectrum(&union)?);

    let mut s_parts = 0.0;
    for (sub, gp) in groups {
        if *gp == 0.0 {
            continue;
        }
        s_parts += gp * von_neumann_entropy(&ensemble_spectrum(sub)?);
    }
    // Clamp tiny negative roundoff: Holevo information is nonnegative.
    Ok((s_total - s_parts).max(0.0))
}

/// Average density operator of an ensemble as a [`SpanOperator`] on the
/// given basis (which must be built from the same state list).
pub fn average_state(basis: Arc<SpanBasis>, ens: &SignalEnsemble) -> Result<SpanOperator> {
    SpanOperator::mixture(basis, ens.priors())
}
