//! Signal ensembles and their Gram matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

use super::coherent::{coherent_overlap, CoherentAmplitude};
use crate::error::{Error, Result};

/// Tolerance for prior normalization.
pub const PRIOR_TOL: f64 = 1e-12;

/// A list of coherent states with prior probabilities: the quantum
/// ciphertext alphabet seen by a receiver.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalEnsemble {
    amplitudes: Vec<CoherentAmplitude>,
    priors: Vec<f64>,
}

impl SignalEnsemble {
    pub fn new(amplitudes: Vec<CoherentAmplitude>, priors: Vec<f64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::domain("ensemble must contain at least one state"));
        }
        if amplitudes.len() != priors.len() {
            return Err(Error::domain(format!(
                "{} amplitudes but {} priors",
                amplitudes.len(),
                priors.len()
            )));
        }
        let mut sum = 0.0;
        for &p in &priors {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::domain(format!("invalid prior probability {p}")));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > PRIOR_TOL {
            return Err(Error::domain(format!(
                "priors sum to {sum}, expected 1 within {PRIOR_TOL}"
            )));
        }
        Ok(Self { amplitudes, priors })
    }

    /// Uniform priors over the given states.
    pub fn uniform(amplitudes: Vec<CoherentAmplitude>) -> Result<Self> {
        let l = amplitudes.len();
        if l == 0 {
            return Err(Error::domain("ensemble must contain at least one state"));
        }
        let priors = vec![1.0 / l as f64; l];
        Self::new(amplitudes, priors)
    }

    /// `l` states equally spaced on the circle of radius `alpha_mag`,
    /// uniform priors: `|α e^{i2πk/l}⟩`, k = 0..l−1.
    pub fn ring(l: usize, alpha_mag: f64) -> Result<Self> {
        if l == 0 {
            return Err(Error::domain("ring ensemble needs at least one state"));
        }
        if !alpha_mag.is_finite() || alpha_mag < 0.0 {
            return Err(Error::domain(format!("invalid ring amplitude {alpha_mag}")));
        }
        let amplitudes = (0..l)
            .map(|k| CoherentAmplitude::from_polar(alpha_mag, 2.0 * PI * k as f64 / l as f64))
            .collect::<Result<Vec<_>>>()?;
        Self::uniform(amplitudes)
    }

    pub fn single(a: CoherentAmplitude) -> Self {
        Self {
            amplitudes: vec![a],
            priors: vec![1.0],
        }
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[CoherentAmplitude] {
        &self.amplitudes
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }
}

/// Pairwise inner products of an ensemble's states.
///
/// Hermitian with unit diagonal and positive semidefinite; it supplies
/// the metric for every operator represented against the raw
/// (non-orthogonal) coherent-state set.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    entries: DMatrix<Complex64>,
}

impl GramMatrix {
    pub fn from_states(amplitudes: &[CoherentAmplitude]) -> Self {
        let l = amplitudes.len();
        let entries = DMatrix::from_fn(l, l, |i, j| coherent_overlap(amplitudes[i], amplitudes[j]));
        Self { entries }
    }

    pub fn from_ensemble(ens: &SignalEnsemble) -> Self {
        Self::from_states(ens.amplitudes())
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    /// Check the structural invariants (Hermitian, unit diagonal, PSD).
    /// Used by tests; construction from states satisfies them up to
    /// floating-point error.
    pub fn validate(&self) -> Result<()> {
        let g = &self.entries;
        let l = self.dim();
        for i in 0..l {
            if (g[(i, i)].re - 1.0).abs() > 1e-12 || g[(i, i)].im.abs() > 1e-12 {
                return Err(Error::numeric(format!("diagonal entry {i} is {}", g[(i, i)])));
            }
            for j in 0..l {
                let d = g[(i, j)] - g[(j, i)].conj();
                if d.norm() > 1e-12 {
                    return Err(Error::numeric(format!("not Hermitian at ({i},{j})")));
                }
            }
        }
        let eigs = super::span::hermitian_eigenvalues(g);
        if let Some(min) = eigs.last() {
            if *min < -1e-10 {
                return Err(Error::numeric(format!("Gram matrix not PSD, min eigenvalue {min}")));
            }
        }
        Ok(())
    }
}

/// Convenience wrapper matching the ensemble-level operation name.
pub fn gram_matrix(ens: &SignalEnsemble) -> GramMatrix {
    GramMatrix::from_ensemble(ens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn priors_must_normalize() {
        let a = CoherentAmplitude::new(1.0, 0.0).unwrap();
        let b = CoherentAmplitude::new(-1.0, 0.0).unwrap();
        assert!(SignalEnsemble::new(vec![a, b], vec![0.6, 0.5]).is_err());
        assert!(SignalEnsemble::new(vec![a, b], vec![-0.1, 1.1]).is_err());
        assert!(SignalEnsemble::new(vec![a, b], vec![0.5, 0.5]).is_ok());
    }

    #[test]
    fn single_state_gram_is_identity() {
        let ens = SignalEnsemble::single(CoherentAmplitude::new(0.7, 0.2).unwrap());
        let g = gram_matrix(&ens);
        assert_eq!(g.dim(), 1);
        assert!((g.entries()[(0, 0)].re - 1.0).abs() < 1e-14);
        g.validate().unwrap();
    }

    #[test]
    fn antipodal_gram_off_diagonal() {
        let a = CoherentAmplitude::new(1.0, 0.0).unwrap();
        let b = CoherentAmplitude::new(-1.0, 0.0).unwrap();
        let ens = SignalEnsemble::uniform(vec![a, b]).unwrap();
        let g = gram_matrix(&ens);
        assert!((g.entries()[(0, 1)].re - (-2.0f64).exp()).abs() < 1e-14);
        g.validate().unwrap();
    }

    #[test]
    fn ring_gram_is_hermitian_psd() {
        let ens = SignalEnsemble::ring(4, 0.5).unwrap();
        gram_matrix(&ens).validate().unwrap();
    }
}
