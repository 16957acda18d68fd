//! The core asymmetry: Bob's keyed binary decision versus Eve's masked
//! 2M-ary data problem.
//!
//! ```bash
//! cargo run --release -p y00lab --example receiver_asymmetry
//! ```

use y00lab::attacks::eve_data_error;
use y00lab::metrics::normal_cdf;
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;
use y00lab::quantum::{helstrom_binary_pure, CoherentAmplitude};

fn main() -> y00lab::Result<()> {
    println!("Receiver asymmetry: Bob (keyed, binary) vs Eve (no key, 2M-ary data)");
    println!();
    println!("{:>6} {:>6} {:>14} {:>14} {:>14}", "alpha", "M", "bob_helstrom", "bob_homodyne", "eve_data_err");

    for alpha in [0.5, 1.0, 2.0] {
        let a = CoherentAmplitude::new(alpha, 0.0)?;
        let b = CoherentAmplitude::new(-alpha, 0.0)?;
        let bob_helstrom = helstrom_binary_pure(a, b, 0.5)?;
        let bob_homodyne = normal_cdf(-2.0 * alpha);
        for m in [4usize, 16, 64] {
            let params = ProtocolParams {
                m,
                alpha_mag: alpha,
                osk_enabled: false,
                basis_keystream: KeystreamKind::Counter { nonce: 0 },
                osk_keystream: KeystreamKind::Counter { nonce: 0 },
            };
            let eve = eve_data_error(&params)?;
            println!(
                "{alpha:>6.2} {m:>6} {bob_helstrom:>14.6e} {bob_homodyne:>14.6e} {eve:>14.9}"
            );
        }
    }

    println!();
    println!("Bob's error depends only on |alpha|; Eve's data error climbs toward 1/2");
    println!("as the constellation densifies — the masking that carries the security.");
    Ok(())
}
