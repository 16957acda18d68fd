//! Eve's running-key receivers: heterodyne nearest-neighbor versus the
//! square-root measurement, against the 1/Γ masking estimate.
//!
//! ```bash
//! cargo run --release -p y00lab --example key_receivers
//! ```

use y00lab::attacks::{eve_key_receiver_error, gamma_masking, AttackView, KeyReceiver};
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;

fn main() -> y00lab::Result<()> {
    println!("KPA view: Eve resolves the M-ary basis grid (data known).");
    println!();
    println!(
        "{:>6} {:>8} {:>7} {:>13} {:>13} {:>13}",
        "M", "alpha", "gamma", "het detect", "srm detect", "1/gamma"
    );
    let trials = 200_000;
    for (m, alpha) in [(64usize, 8.0f64), (256, 20.0), (1024, 100.0), (1024, 50.0)] {
        let params = ProtocolParams {
            m,
            alpha_mag: alpha,
            osk_enabled: false,
            basis_keystream: KeystreamKind::Counter { nonce: 0 },
            osk_keystream: KeystreamKind::Counter { nonce: 0 },
        };
        let gamma = gamma_masking(&params)?.value();
        let het = 1.0
            - eve_key_receiver_error(&params, KeyReceiver::HeterodyneMary, AttackView::Kpa, trials, 5)?;
        let srm = 1.0 - eve_key_receiver_error(&params, KeyReceiver::Srm, AttackView::Kpa, 1, 0)?;
        println!(
            "{m:>6} {alpha:>8.1} {gamma:>7} {het:>13.4} {srm:>13.4} {:>13.4}",
            1.0 / gamma as f64
        );
    }
    println!();
    println!("The quantum-optimal SRM beats the heterodyne receiver, but both are");
    println!("pinned near the 1/Γ ambiguity of the quantum-noise masking region.");
    Ok(())
}
