//! Exhaustive key search against a deliberately tiny LFSR key: the
//! masked cipher's detection probability versus the mathematical-cipher
//! endpoint, as the known plaintext grows.
//!
//! ```bash
//! cargo run --release -p y00lab --example exhaustive_key_search
//! ```

use y00lab::attacks::{
    gamma_masking, key_detection_math, simulate_exhaustive_kpa, ExhaustiveConfig,
};
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;

fn params(alpha: f64, osk: bool) -> ProtocolParams {
    let lfsr = KeystreamKind::Lfsr {
        width: 12,
        taps: vec![12, 6, 4, 1],
    };
    ProtocolParams {
        m: 16,
        alpha_mag: alpha,
        osk_enabled: osk,
        basis_keystream: lfsr.clone(),
        osk_keystream: lfsr,
    }
}

fn main() -> y00lab::Result<()> {
    let keylen = 12u32;
    let trials = 4000;

    println!("12-bit LFSR key, M=16. Math-cipher endpoint: P_d = 1 at n = |K| bits.");
    println!();
    println!(
        "{:>10} {:>6} {:>8} {:>12} {:>12} {:>12} {:>12}",
        "config", "gamma", "slots", "P_d (pick)", "P_d unique", "analytic", "math P_d"
    );

    for (label, alpha, osk) in [("unmasked", 50.0, false), ("masked", 1.455, true)] {
        let p = params(alpha, osk);
        let gamma = gamma_masking(&p)?.value();
        for slots in [3usize, 12, 48, 96] {
            let (report, stats) = simulate_exhaustive_kpa(&ExhaustiveConfig {
                params: p.clone(),
                known_plaintext_len: slots,
                trials,
                seed: 99,
            })?;
            let math = key_detection_math(keylen, (slots * 4).min(u32::MAX as usize) as u32);
            println!(
                "{label:>10} {gamma:>6} {slots:>8} {:>12.5} {:>12.5} {:>12.5} {math:>12.5}",
                report.empirical, stats.unique_probability, report.analytic
            );
        }
        println!();
    }

    println!("Unmasked (Γ=1) the search pins the key as soon as the observations");
    println!("cover the key length. Masked with OSK, the detection probability sits");
    println!("orders of magnitude below 1 and never rises toward it — more plaintext");
    println!("does not help, which no conventional stream cipher can offer.");
    Ok(())
}
