//! Exact finite-dimensional quantum mathematics over coherent-state
//! ensembles: overlaps, Gram matrices, density-operator spectra,
//! entropies, optimal measurements, and Holevo information.
//!
//! All operations are pure functions of immutable values and may be
//! evaluated in parallel without coordination.

pub mod coherent;
pub mod ensemble;
pub mod entropy;
pub mod measurement;
pub mod span;

pub use coherent::{coherent_overlap, CoherentAmplitude};
pub use ensemble::{gram_matrix, GramMatrix, SignalEnsemble};
pub use entropy::{
    average_state, ensemble_spectrum, holevo_information, holevo_information_mixed,
    ring_spectrum, von_neumann_entropy, Spectrum,
};
pub use measurement::{
    helstrom_binary, helstrom_binary_pure, helstrom_projectors, holevo_condition_residual,
    srm_symmetric_error,
};
pub use span::{ring_gram_eigenvalues, trace_distance, trace_norm, SpanBasis, SpanOperator};
