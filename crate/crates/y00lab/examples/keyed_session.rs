//! Run one encryption/decryption session end to end and inspect the
//! transcript: running keys, OSK bits, constellation points, and Bob's
//! decoded plaintext.
//!
//! ```bash
//! cargo run --release -p y00lab --example keyed_session
//! ```

use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::{run_session, ChannelModel, ProtocolParams, SecretKey};
use y00lab::rng::stream_rng;

fn main() -> y00lab::Result<()> {
    let params = ProtocolParams {
        m: 16,
        alpha_mag: 1.0,
        osk_enabled: true,
        basis_keystream: KeystreamKind::Counter { nonce: 1 },
        osk_keystream: KeystreamKind::Counter { nonce: 2 },
    };
    let key = SecretKey::from_integer(0x2F58_11C3, 32)?;

    let mut rng = stream_rng(7, "example-plaintext", 0);
    let plaintext: Vec<u8> = (0..100_000)
        .map(|_| rand::Rng::gen_range(&mut rng, 0..=1u8))
        .collect();

    let transcript = run_session(&key, &plaintext, &params, ChannelModel::Homodyne, 42)?;

    println!("first 8 transcript rows:");
    let csv = transcript.to_csv();
    for line in csv.lines().take(9) {
        println!("  {line}");
    }

    let errors = transcript.bit_errors();
    let ber = errors as f64 / plaintext.len() as f64;
    println!();
    println!("slots                {}", transcript.len());
    println!("bit errors           {errors}");
    println!("empirical BER        {ber:.6e}");
    println!("analytic (homodyne)  {:.6e}", ChannelModel::Homodyne.analytic_ber(params.alpha_mag));

    let noiseless = run_session(&key, &plaintext, &params, ChannelModel::Noiseless, 42)?;
    assert_eq!(noiseless.bob_bits(), plaintext.as_slice());
    println!("noiseless round trip exact: true");
    Ok(())
}
