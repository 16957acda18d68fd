//! The quantum-detection layer by itself: overlaps, spectra, Helstrom
//! discrimination, the square-root measurement, and the stationarity
//! check for information-optimal POVMs.
//!
//! ```bash
//! cargo run --release -p y00lab --example measurement_theory
//! ```

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::sync::Arc;
use y00lab::quantum::{
    coherent_overlap, ensemble_spectrum, helstrom_binary, helstrom_projectors,
    holevo_condition_residual, holevo_information, srm_symmetric_error, von_neumann_entropy,
    CoherentAmplitude, SignalEnsemble, SpanBasis, SpanOperator,
};

fn main() -> y00lab::Result<()> {
    let alpha = CoherentAmplitude::new(1.0, 0.0)?;
    let anti = CoherentAmplitude::new(-1.0, 0.0)?;

    println!("overlap <a|-a> at |a|=1:      {:.6}", coherent_overlap(alpha, anti).re);

    let pair = SignalEnsemble::uniform(vec![alpha, anti])?;
    let spectrum = ensemble_spectrum(&pair)?;
    println!("average-state spectrum:       {:?}", spectrum.eigenvalues());
    println!("Holevo information:           {:.6} bits", holevo_information(&pair)?);
    println!("entropy check:                {:.6} bits", von_neumann_entropy(&spectrum));

    // Helstrom discrimination of the antipodal pair.
    let basis = Arc::new(SpanBasis::from_ensemble(&pair)?);
    let mut c0 = DMatrix::<Complex64>::zeros(2, 2);
    c0[(0, 0)] = Complex64::new(1.0, 0.0);
    let mut c1 = DMatrix::<Complex64>::zeros(2, 2);
    c1[(1, 1)] = Complex64::new(1.0, 0.0);
    let rho0 = SpanOperator::density(basis.clone(), c0)?;
    let rho1 = SpanOperator::density(basis.clone(), c1)?;
    println!("Helstrom error:               {:.6e}", helstrom_binary(&rho0, &rho1, 0.5)?);

    // Square-root measurement across ring sizes.
    println!("\nsymmetric-ring SRM error at |a|=1:");
    for l in [2usize, 4, 8, 16, 32] {
        println!("  L = {l:>3}: {:.6}", srm_symmetric_error(l, 1.0)?);
    }

    // Stationarity residual at and off the optimal measurement.
    let povm = helstrom_projectors(&rho0, &rho1, 0.5)?;
    println!(
        "\nstationarity residual at the Helstrom measurement: {:.2e}",
        holevo_condition_residual(&pair, &povm)?
    );
    let phi: f64 = 0.3;
    let v = DMatrix::from_row_slice(
        2,
        1,
        &[Complex64::new(phi.cos(), 0.0), Complex64::new(phi.sin(), 0.0)],
    );
    let p0 = &v * v.adjoint();
    let p1 = DMatrix::<Complex64>::identity(2, 2) - &p0;
    let rotated = [
        SpanOperator::new(basis.clone(), basis.from_ortho(&p0))?,
        SpanOperator::new(basis.clone(), basis.from_ortho(&p1))?,
    ];
    println!(
        "residual for a rotated (suboptimal) projector pair: {:.2e}",
        holevo_condition_residual(&pair, &rotated)?
    );
    Ok(())
}
