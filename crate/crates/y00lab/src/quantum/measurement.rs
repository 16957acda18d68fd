//! Optimal and structured measurements: Helstrom discrimination, the
//! square-root measurement for symmetric ensembles, and the stationarity
//! check for accessible-information-optimal POVMs.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::coherent::{coherent_overlap, CoherentAmplitude};
use super::ensemble::SignalEnsemble;
use super::span::{hermitian_eigenpairs, ring_gram_eigenvalues, SpanOperator};
use crate::error::{Error, Result};

/// Minimum average error probability for discriminating two density
/// operators with priors `(ξ₀, 1−ξ₀)`:
///
/// `P_e = (1 − ‖ξ₁ρ₁ − ξ₀ρ₀‖₁)/2`,
///
/// the mixed-state Helstrom bound via the trace norm. For equiprobable
/// pure states this reduces to `(1 − √(1 − |⟨ψ₀|ψ₁⟩|²))/2`.
pub fn helstrom_binary(rho0: &SpanOperator, rho1: &SpanOperator, xi0: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&xi0) {
        return Err(Error::domain(format!("prior {xi0} outside [0,1]")));
    }
    if !rho0.same_span(rho1) {
        return Err(Error::domain("Helstrom operands live on different spans"));
    }
    let xi1 = 1.0 - xi0;
    let diff = rho1.coeff() * Complex64::new(xi1, 0.0) - rho0.coeff() * Complex64::new(xi0, 0.0);
    let ortho = rho0.basis().to_ortho(&diff);
    let tn: f64 = super::span::hermitian_eigenvalues(&ortho)
        .iter()
        .map(|e| e.abs())
        .sum();
    // Clamp roundoff: the exact value lies in [0, min(ξ₀, ξ₁)].
    Ok(((1.0 - tn) / 2.0).clamp(0.0, xi0.min(xi1)))
}

/// Closed-form Helstrom error for two pure coherent states.
pub fn helstrom_binary_pure(a: CoherentAmplitude, b: CoherentAmplitude, xi0: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&xi0) {
        return Err(Error::domain(format!("prior {xi0} outside [0,1]")));
    }
    let xi1 = 1.0 - xi0;
    let overlap_sq = coherent_overlap(a, b).norm_sqr();
    Ok((1.0 - (1.0 - 4.0 * xi0 * xi1 * overlap_sq).max(0.0).sqrt()) / 2.0)
}

/// Average error probability of the square-root measurement on `l`
/// states equally spaced on the circle of radius `alpha_mag`, uniform
/// priors — the optimal value for symmetric coherent constellations.
///
/// `P_correct = (Σ_m √μ_m)² / l²` with `μ_m` the Gram eigenvalues
/// (obtained from the DFT of the circulant overlap row).
pub fn srm_symmetric_error(l: usize, alpha_mag: f64) -> Result<f64> {
    if l < 2 {
        return Err(Error::domain(format!("symmetric scheme needs l ≥ 2, got {l}")));
    }
    let mu = ring_gram_eigenvalues(l, alpha_mag)?;
    let s: f64 = mu.iter().map(|m| m.sqrt()).sum();
    let p_correct = (s / l as f64).powi(2);
    Ok((1.0 - p_correct).clamp(0.0, 1.0 - 1.0 / l as f64))
}

/// Projective Helstrom measurement `{Π₀, Π₁}` for two density operators:
/// `Π₁` projects onto the positive eigenspace of `ξ₁ρ₁ − ξ₀ρ₀`, `Π₀`
/// onto the rest of the span.
pub fn helstrom_projectors(
    rho0: &SpanOperator,
    rho1: &SpanOperator,
    xi0: f64,
) -> Result<[SpanOperator; 2]> {
    if !rho0.same_span(rho1) {
        return Err(Error::domain("Helstrom operands live on different spans"));
    }
    let basis = rho0.basis().clone();
    let xi1 = 1.0 - xi0;
    let diff = rho1.coeff() * Complex64::new(xi1, 0.0) - rho0.coeff() * Complex64::new(xi0, 0.0);
    let ortho = basis.to_ortho(&diff);
    let (vals, vecs) = hermitian_eigenpairs(&ortho);

    let r = basis.rank();
    let mut p1 = DMatrix::<Complex64>::zeros(r, r);
    for (k, &lambda) in vals.iter().enumerate() {
        if lambda > 0.0 {
            let v = vecs.column(k);
            p1 += v * v.adjoint();
        }
    }
    let p0 = DMatrix::<Complex64>::identity(r, r) - &p1;
    Ok([
        SpanOperator::new(basis.clone(), basis.from_ortho(&p0))?,
        SpanOperator::new(basis.clone(), basis.from_ortho(&p1))?,
    ])
}

/// Residual of the stationarity condition for accessible-information-
/// optimal measurements on a pure-state ensemble:
///
/// with `P(j|i) = Tr ρ_i Π_j` and
/// `F_j = Σ_l ξ_l ρ_l log₂[P(j|l)/Σ_k ξ_k P(j|k)]`,
/// the optimum satisfies `Π_j (F_j − F_i) Π_i = 0` for all pairs. The
/// returned value is the maximum Hilbert–Schmidt norm of those products;
/// it vanishes at an optimal measurement and is strictly positive away
/// from one.
pub fn holevo_condition_residual(ens: &SignalEnsemble, povm: &[SpanOperator]) -> Result<f64> {
    if povm.is_empty() {
        return Err(Error::domain("POVM must have at least one element"));
    }
    let basis = povm[0].basis().clone();
    if basis.amplitudes() != ens.amplitudes() {
        return Err(Error::domain("POVM span does not match the ensemble"));
    }
    for op in povm {
        if !op.same_span(&povm[0]) {
            return Err(Error::domain("POVM elements live on different spans"));
        }
    }

    let r = basis.rank();
    let l = ens.len();
    let elements: Vec<DMatrix<Complex64>> = povm.iter().map(|p| p.ortho_matrix()).collect();

    // PSD within tolerance and completeness on the span within 1e-8.
    let mut sum = DMatrix::<Complex64>::zeros(r, r);
    for m in &elements {
        let eigs = super::span::hermitian_eigenvalues(m);
        if let Some(min) = eigs.last() {
            if *min < -1e-8 {
                return Err(Error::domain(format!("POVM element has eigenvalue {min}")));
            }
        }
        sum += m;
    }
    let id = DMatrix::<Complex64>::identity(r, r);
    let dev = (&sum - &id).iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if dev > 1e-8 {
        return Err(Error::domain(format!(
            "POVM does not resolve the identity on the span (deviation {dev:.3e})"
        )));
    }

    // Pure-state density matrices ρ_i in the orthonormal basis.
    let states: Vec<DMatrix<Complex64>> = (0..l)
        .map(|i| {
            let mut c = DMatrix::<Complex64>::zeros(l, l);
            c[(i, i)] = Complex64::new(1.0, 0.0);
            basis.to_ortho(&c)
        })
        .collect();
    let priors = ens.priors();

    // Conditional and marginal outcome probabilities.
    let n_out = elements.len();
    let mut cond = vec![vec![0.0; l]; n_out];
    let mut marginal = vec![0.0; n_out];
    for (j, pj) in elements.iter().enumerate() {
        for i in 0..l {
            let p = (pj * &states[i]).trace().re.max(0.0);
            cond[j][i] = p;
            marginal[j] += priors[i] * p;
        }
    }

    // F_j operators; probabilities are floored to keep logs finite at
    // zero-probability outcomes, which only inflates the residual.
    let floor = f64::MIN_POSITIVE;
    let f_ops: Vec<DMatrix<Complex64>> = (0..n_out)
        .map(|j| {
            let mut f = DMatrix::<Complex64>::zeros(r, r);
            if marginal[j] <= floor {
                return f;
            }
            for i in 0..l {
                let ratio = (cond[j][i].max(floor) / marginal[j]).log2();
                f += &states[i] * Complex64::new(priors[i] * ratio, 0.0);
            }
            f
        })
        .collect();

    let mut worst: f64 = 0.0;
    for j in 0..n_out {
        for i in 0..n_out {
            let m = &elements[j] * (&f_ops[j] - &f_ops[i]) * &elements[i];
            worst = worst.max(m.norm());
        }
    }
    Ok(worst)
}
