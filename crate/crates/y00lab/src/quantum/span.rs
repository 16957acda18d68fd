//! Operators on the span of a coherent-state set.
//!
//! Every density operator and measurement element in the laboratory lives
//! in the span of finitely many coherent states `{|ψ_i⟩}`. An operator is
//! stored as a coefficient matrix `C` meaning `A = Σ_ij C_ij |ψ_i⟩⟨ψ_j|`,
//! with the Gram matrix `G` supplying the metric. Orthonormalizing the
//! span (a symmetric `G^{1/2}` conjugation with deflation of near-null
//! directions) turns every spectral question into an ordinary Hermitian
//! eigenproblem:
//!
//! * operator matrix in the orthonormal basis: `Ã = B C B†` with
//!   `B = diag(√g)·U†` from `G = U diag(g) U†`;
//! * eigenvalues of `A` = eigenvalues of `Ã` (plus zeros off the span);
//! * `Tr A = Tr(C·G)`, products compose as `Ã₁Ã₂`.
//!
//! This is exact for any amplitude; Fock-space truncation appears only as
//! a test oracle.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

use super::coherent::CoherentAmplitude;
use super::ensemble::{GramMatrix, SignalEnsemble};
use crate::error::{Error, Result};

/// Gram eigenvalues below this are treated as null directions and the
/// span is deflated before any inversion-like step.
pub const SPAN_DEFLATION_TOL: f64 = 1e-12;

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let eig = m.clone().symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// Hermitian eigendecomposition returning (eigenvalues, eigenvectors as
/// columns), eigenvalues descending.
pub fn hermitian_eigenpairs(m: &DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let eig = m.clone().symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vecs = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vecs.set_column(dst, &eig.eigenvectors.column(src));
    }
    (vals, vecs)
}

/// Orthonormalized span of a coherent-state set.
///
/// Holds the forward map `B` (coefficient matrix → orthonormal-basis
/// matrix) and its right inverse `T` (orthonormal-basis matrix →
/// coefficient matrix), both restricted to the numerically non-null part
/// of the span.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    amplitudes: Vec<CoherentAmplitude>,
    gram: GramMatrix,
    /// `B = diag(√g_kept)·U_kept†`, shape r×L.
    fwd: DMatrix<Complex64>,
    /// `T = U_kept·diag(1/√g_kept)`, shape L×r; `B·T = I_r`.
    inv: DMatrix<Complex64>,
    rank: usize,
    clipped_mass: f64,
}

impl SpanBasis {
    /// Orthonormalize the span of the given states (generic eigen path).
    pub fn from_states(amplitudes: &[CoherentAmplitude]) -> Result<Self> {
        let gram = GramMatrix::from_states(amplitudes);
        let (g, u) = hermitian_eigenpairs(gram.entries());
        Self::assemble(amplitudes.to_vec(), gram, g, u)
    }

    pub fn from_ensemble(ens: &SignalEnsemble) -> Result<Self> {
        Self::from_states(ens.amplitudes())
    }

    /// Orthonormalize the span of `l` states equally spaced on the circle
    /// of radius `alpha_mag`.
    ///
    /// The Gram matrix of a symmetric ring is circulant, so its
    /// eigenvectors are the discrete Fourier vectors and its eigenvalues
    /// come from a DFT of the first row; no dense eigensolve is needed.
    /// Large rings deflate to the handful of photon-number modes with
    /// non-negligible weight.
    pub fn ring(l: usize, alpha_mag: f64) -> Result<Self> {
        let ens = SignalEnsemble::ring(l, alpha_mag)?;
        let amplitudes = ens.amplitudes().to_vec();
        let gram = GramMatrix::from_states(&amplitudes);
        let mu = ring_gram_eigenvalues(l, alpha_mag)?;

        let ln = l as f64;
        let mut order: Vec<usize> = (0..l).collect();
        order.sort_by(|&a, &b| mu[b].partial_cmp(&mu[a]).unwrap());
        let vals: Vec<f64> = order.iter().map(|&m| mu[m]).collect();
        // Fourier eigenvector for mode m: v_j = ω^{jm}/√L.
        let vecs = DMatrix::from_fn(l, l, |j, col| {
            let m = order[col];
            Complex64::from_polar(1.0 / ln.sqrt(), 2.0 * PI * (j * m) as f64 / ln)
        });
        Self::assemble(amplitudes, gram, vals, vecs)
    }

    fn assemble(
        amplitudes: Vec<CoherentAmplitude>,
        gram: GramMatrix,
        eigenvalues: Vec<f64>,
        eigenvectors: DMatrix<Complex64>,
    ) -> Result<Self> {
        let l = amplitudes.len();
        let rank = eigenvalues.iter().take_while(|&&g| g > SPAN_DEFLATION_TOL).count();
        if rank == 0 {
            return Err(Error::numeric("span of states is numerically empty"));
        }
        let clipped_mass: f64 = eigenvalues[rank..].iter().map(|g| g.max(0.0)).sum();

        let mut fwd = DMatrix::zeros(rank, l);
        let mut inv = DMatrix::zeros(l, rank);
        for a in 0..rank {
            let s = eigenvalues[a].sqrt();
            for j in 0..l {
                let u = eigenvectors[(j, a)];
                fwd[(a, j)] = u.conj() * Complex64::new(s, 0.0);
                inv[(j, a)] = u / Complex64::new(s, 0.0);
            }
        }
        Ok(Self {
            amplitudes,
            gram,
            fwd,
            inv,
            rank,
            clipped_mass,
        })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Total Gram-eigenvalue mass removed by span deflation.
    pub fn clipped_mass(&self) -> f64 {
        self.clipped_mass
    }

    pub fn amplitudes(&self) -> &[CoherentAmplitude] {
        &self.amplitudes
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    /// Matrix of the operator `Σ C_ij |ψ_i⟩⟨ψ_j|` in the orthonormal
    /// basis: `B C B†` (r×r, Hermitian when `C` is).
    pub fn to_ortho(&self, coeff: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        &self.fwd * coeff * self.fwd.adjoint()
    }

    /// Coefficient matrix whose induced operator has the given matrix in
    /// the orthonormal basis: `T m T†`.
    pub fn from_ortho(&self, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        &self.inv * m * self.inv.adjoint()
    }

    /// Coefficient matrix of the identity on the (deflated) span.
    pub fn identity_coeff(&self) -> DMatrix<Complex64> {
        self.from_ortho(&DMatrix::identity(self.rank, self.rank))
    }

    pub fn same_span(&self, other: &SpanBasis) -> bool {
        self.amplitudes == other.amplitudes
    }
}

/// Eigenvalues of the Gram matrix of `l` states equally spaced on the
/// circle of radius `alpha_mag`, by DFT of the circulant first row.
///
/// Entry `d` of the row is `exp(|α|²(ω^d − 1))` with `ω = e^{i2π/l}`; the
/// eigenvalue of Fourier mode `m` is `Σ_d row_d ω^{md}`. Tiny negative
/// results from roundoff are clipped to zero.
pub fn ring_gram_eigenvalues(l: usize, alpha_mag: f64) -> Result<Vec<f64>> {
    if l == 0 {
        return Err(Error::domain("ring must have at least one state"));
    }
    if !alpha_mag.is_finite() || alpha_mag < 0.0 {
        return Err(Error::domain(format!("invalid ring amplitude {alpha_mag}")));
    }
    let n2 = alpha_mag * alpha_mag;
    let ln = l as f64;
    let row: Vec<Complex64> = (0..l)
        .map(|d| {
            let w = Complex64::from_polar(1.0, 2.0 * PI * d as f64 / ln);
            ((w - Complex64::new(1.0, 0.0)) * n2).exp()
        })
        .collect();
    let mut eigs = Vec::with_capacity(l);
    for m in 0..l {
        let mut acc = Complex64::new(0.0, 0.0);
        for (d, c) in row.iter().enumerate() {
            acc += c * Complex64::from_polar(1.0, 2.0 * PI * ((m * d) % l) as f64 / ln);
        }
        eigs.push(acc.re.max(0.0));
    }
    Ok(eigs)
}

/// Hermitian operator represented on a shared span basis.
#[derive(Debug, Clone)]
pub struct SpanOperator {
    basis: Arc<SpanBasis>,
    coeff: DMatrix<Complex64>,
}

impl SpanOperator {
    /// Wrap a coefficient matrix, enforcing Hermiticity.
    pub fn new(basis: Arc<SpanBasis>, coeff: DMatrix<Complex64>) -> Result<Self> {
        let l = basis.dim();
        if coeff.nrows() != l || coeff.ncols() != l {
            return Err(Error::domain(format!(
                "coefficient matrix is {}x{}, span has {l} states",
                coeff.nrows(),
                coeff.ncols()
            )));
        }
        let dev = (&coeff - coeff.adjoint()).norm() / 2.0;
        if dev > 1e-12 * (1.0 + coeff.norm()) {
            return Err(Error::domain(format!(
                "coefficient matrix not Hermitian (deviation {dev:.3e})"
            )));
        }
        Ok(Self { basis, coeff })
    }

    /// Wrap a coefficient matrix that must induce a density operator:
    /// unit trace within 1e-10 and eigenvalues ≥ −1e-10.
    pub fn density(basis: Arc<SpanBasis>, coeff: DMatrix<Complex64>) -> Result<Self> {
        let op = Self::new(basis, coeff)?;
        let tr = op.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(Error::domain(format!("density operator trace is {tr}")));
        }
        if let Some(min) = op.eigenvalues().last() {
            if *min < -1e-10 {
                return Err(Error::domain(format!(
                    "density operator has eigenvalue {min}"
                )));
            }
        }
        Ok(op)
    }

    /// Diagonal mixture: weight `w_i` on the span's i-th state.
    pub fn mixture(basis: Arc<SpanBasis>, weights: &[f64]) -> Result<Self> {
        if weights.len() != basis.dim() {
            return Err(Error::domain("weight count does not match span size"));
        }
        let coeff = DMatrix::from_fn(weights.len(), weights.len(), |i, j| {
            if i == j {
                Complex64::new(weights[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self::density(basis, coeff)
    }

    pub fn basis(&self) -> &Arc<SpanBasis> {
        &self.basis
    }

    pub fn coeff(&self) -> &DMatrix<Complex64> {
        &self.coeff
    }

    /// `Tr A = Tr(G·C)`.
    pub fn trace(&self) -> Complex64 {
        let g = self.basis.gram().entries();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                acc += g[(i, j)] * self.coeff[(j, i)];
            }
        }
        acc
    }

    /// Matrix in the orthonormalized span basis.
    pub fn ortho_matrix(&self) -> DMatrix<Complex64> {
        self.basis.to_ortho(&self.coeff)
    }

    /// Eigenvalues on the span, descending (zeros off the span omitted).
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.ortho_matrix())
    }

    pub fn same_span(&self, other: &SpanOperator) -> bool {
        Arc::ptr_eq(&self.basis, &other.basis) || self.basis.same_span(&other.basis)
    }
}

/// Trace norm `‖A‖₁ = Σ|eigenvalues|` of a Hermitian span operator.
pub fn trace_norm(op: &SpanOperator) -> f64 {
    op.eigenvalues().iter().map(|e| e.abs()).sum()
}

/// Trace distance `½‖A − B‖₁` between operators on a common span.
pub fn trace_distance(a: &SpanOperator, b: &SpanOperator) -> Result<f64> {
    if !a.same_span(b) {
        return Err(Error::domain("operators live on different spans"));
    }
    let diff = a.coeff() - b.coeff();
    let ortho = a.basis().to_ortho(&diff);
    Ok(hermitian_eigenvalues(&ortho).iter().map(|e| e.abs()).sum::<f64>() / 2.0)
}
