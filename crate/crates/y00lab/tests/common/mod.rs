//! Fock-truncation oracle shared by the integration suites.
//!
//! Everything here represents states as photon-number vectors in a
//! truncated Fock space — a representation entirely independent of the
//! crate's Gram-matrix span path — so agreement between the two is a
//! real cross-check, not a tautology.

// Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use y00lab::quantum::span::hermitian_eigenvalues;
use y00lab::quantum::{CoherentAmplitude, SignalEnsemble};

/// Coherent state as a truncated Fock vector:
/// `c_n = e^{−|α|²/2} α^n/√(n!)`, built iteratively.
pub fn fock_vector(amp: CoherentAmplitude, n_max: usize) -> DVector<Complex64> {
    let alpha = amp.as_complex();
    let mut coeffs = Vec::with_capacity(n_max + 1);
    let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
    coeffs.push(c);
    for n in 0..n_max {
        c = c * alpha / Complex64::new(((n + 1) as f64).sqrt(), 0.0);
        coeffs.push(c);
    }
    DVector::from_vec(coeffs)
}

/// Weighted density matrix `Σ w_i |ψ_i⟩⟨ψ_i|` in Fock space.
pub fn fock_density(states: &[CoherentAmplitude], weights: &[f64], n_max: usize) -> DMatrix<Complex64> {
    let dim = n_max + 1;
    let mut rho = DMatrix::<Complex64>::zeros(dim, dim);
    for (a, &w) in states.iter().zip(weights) {
        let v = fock_vector(*a, n_max);
        rho += &v * v.adjoint() * Complex64::new(w, 0.0);
    }
    rho
}

pub fn fock_ensemble_density(ens: &SignalEnsemble, n_max: usize) -> DMatrix<Complex64> {
    fock_density(ens.amplitudes(), ens.priors(), n_max)
}

/// Density-matrix spectrum in Fock space, descending.
pub fn fock_spectrum(ens: &SignalEnsemble, n_max: usize) -> Vec<f64> {
    hermitian_eigenvalues(&fock_ensemble_density(ens, n_max))
}

pub fn entropy_bits(eigs: &[f64]) -> f64 {
    -eigs.iter().filter(|&&l| l > 0.0).map(|&l| l * l.log2()).sum::<f64>()
}

/// Binary Helstrom error from Fock-space density matrices.
pub fn fock_helstrom(
    rho0: &DMatrix<Complex64>,
    rho1: &DMatrix<Complex64>,
    xi0: f64,
) -> f64 {
    let diff = rho1 * Complex64::new(1.0 - xi0, 0.0) - rho0 * Complex64::new(xi0, 0.0);
    let tn: f64 = hermitian_eigenvalues(&diff).iter().map(|e| e.abs()).sum();
    (1.0 - tn) / 2.0
}

/// Square-root-measurement error for the symmetric L-state ring, built
/// from explicit SRM operators in Fock space.
pub fn fock_srm_error(l: usize, alpha_mag: f64, n_max: usize) -> f64 {
    let ens = SignalEnsemble::ring(l, alpha_mag).unwrap();
    let rho = fock_ensemble_density(&ens, n_max);
    // Pseudo-inverse square root of the average state.
    let eig = rho.clone().symmetric_eigen();
    let dim = n_max + 1;
    let mut s = DMatrix::<Complex64>::zeros(dim, dim);
    for k in 0..dim {
        let lambda = eig.eigenvalues[k];
        if lambda > 1e-12 {
            let v = eig.eigenvectors.column(k);
            s += v * v.adjoint() * Complex64::new(1.0 / lambda.sqrt(), 0.0);
        }
    }
    let mut p_correct = 0.0;
    for a in ens.amplitudes() {
        let v = fock_vector(*a, n_max);
        let amp = (v.adjoint() * &s * &v)[(0, 0)];
        p_correct += amp.norm_sqr() / (l * l) as f64;
    }
    1.0 - p_correct
}

/// 95% binomial half-width.
pub fn binomial_ci95(p: f64, n: u64) -> f64 {
    1.96 * (p * (1.0 - p) / n as f64).sqrt()
}

/// 3σ binomial half-width.
pub fn binomial_3sigma(p: f64, n: u64) -> f64 {
    3.0 * (p * (1.0 - p) / n as f64).sqrt()
}
