//! Overlap selection keying in action: the data-conditioned transmit
//! states coincide once the bit assignment is re-randomized per slot,
//! so Eve's data error pins to exactly 1/2 at any M and amplitude.
//!
//! ```bash
//! cargo run --release -p y00lab --example osk_masking
//! ```

use y00lab::attacks::{eve_data_error, eve_data_operators};
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;
use y00lab::quantum::trace_distance;

fn params(m: usize, alpha: f64, osk: bool) -> ProtocolParams {
    ProtocolParams {
        m,
        alpha_mag: alpha,
        osk_enabled: osk,
        basis_keystream: KeystreamKind::Counter { nonce: 0 },
        osk_keystream: KeystreamKind::Counter { nonce: 0 },
    }
}

fn main() -> y00lab::Result<()> {
    println!("{:>6} {:>6} {:>16} {:>16} {:>12}", "M", "alpha", "err (OSK off)", "err (OSK on)", "tracedist on");
    for m in [2usize, 4, 8, 16, 64] {
        for alpha in [0.5, 1.0] {
            let off = eve_data_error(&params(m, alpha, false))?;
            let on = eve_data_error(&params(m, alpha, true))?;
            let (rho0, rho1) = eve_data_operators(&params(m, alpha, true))?;
            let td = trace_distance(&rho0, &rho1)?;
            println!("{m:>6} {alpha:>6.2} {off:>16.9} {on:>16.9} {td:>12.2e}");
        }
    }
    println!();
    println!("Without OSK the conditionals separate at small M; with OSK they are");
    println!("the same operator, and a known-plaintext attacker learns nothing about");
    println!("the bit — every plaintext attack degenerates to ciphertext-only.");
    Ok(())
}
