//! Numerical laboratory for the Y-00 quantum stream cipher.
//!
//! Y-00 encrypts by modulation: a keyed pseudorandom sequence selects one
//! of `M` binary phase bases per slot, so the legitimate receiver solves
//! an easy antipodal discrimination problem while an eavesdropper faces a
//! dense `2M`-ary constellation masked by quantum noise. This crate
//! simulates the protocol end to end and evaluates its security with
//! exact quantum-detection mathematics:
//!
//! * [`quantum`] — coherent-state ensembles, Gram-matrix span
//!   representation, Helstrom/square-root measurements, von Neumann
//!   entropy and Holevo information;
//! * [`protocol`] — keystream generation, encryption by modulation with
//!   optional overlap selection keying (OSK), and the keyed receiver;
//! * [`attacks`] — heterodyne sampling, quantum-noise masking numbers,
//!   data- and key-attack error probabilities, exhaustive key search;
//! * [`metrics`] — Shannon/min-entropy utilities, generalized unicity
//!   distance lower bounds, randomization sweeps, and the wiretap/QKD
//!   comparison formulas;
//! * [`cli`] — the `y00lab` experiment driver (`metrics`, `simulate`,
//!   `attack`, `sweep`) with deterministic seeding and CSV/JSON/SVG
//!   outputs.
//!
//! Start with the `examples/` directory for runnable walkthroughs of
//! each capability.

pub mod attacks;
pub mod cli;
pub mod error;
pub mod metrics;
pub mod protocol;
pub mod quantum;
pub mod rng;

pub use error::{Error, Result};
