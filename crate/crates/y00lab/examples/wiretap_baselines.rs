//! The comparison calculators: Wyner secrecy capacity, the Pinsker
//! bound, min-entropy bounds, and the Shannon-limit check.
//!
//! ```bash
//! cargo run --release -p y00lab --example wiretap_baselines
//! ```

use y00lab::attacks::AttackView;
use y00lab::metrics::{
    eve_channel_holevo, minentropy, minentropy_lower_bound, pinsker_bound, shannon_entropy,
    shannon_limit_check, wyner_secrecy_capacity, DiscreteDistribution, ShannonLimit,
};
use y00lab::protocol::keystream::KeystreamKind;
use y00lab::protocol::ProtocolParams;

fn main() -> y00lab::Result<()> {
    println!("Wyner secrecy capacity (Gaussian wiretap):");
    for (snr_b, snr_e) in [(15.0, 3.0), (10.0, 10.0), (3.0, 15.0)] {
        let c = wyner_secrecy_capacity(snr_b, snr_e)?;
        println!("  snr_b = {snr_b:>5.1}, snr_e = {snr_e:>5.1}  ->  C_s = {c:.4} bits/use");
    }

    println!("\nPinsker bound on statistical distance from leaked information:");
    for info_bits in [0.0, 0.1, 0.5, 1.0] {
        println!("  I = {info_bits:.1} bits  ->  d_c <= {:.4}", pinsker_bound(info_bits)?);
    }

    println!("\nMin-entropy of example distributions:");
    let uniform = DiscreteDistribution::uniform(16)?;
    let skewed = DiscreteDistribution::new(vec![0.5, 0.25, 0.25])?;
    println!(
        "  uniform/16: H = {:.3}, Hmin = {:.3}",
        shannon_entropy(&uniform),
        minentropy(&uniform)
    );
    println!(
        "  (1/2,1/4,1/4): H = {:.3}, Hmin = {:.3}",
        shannon_entropy(&skewed),
        minentropy(&skewed)
    );

    println!("\nAsymptotic min-entropy bound H(X) − chi for the Y-00 data bit:");
    for (m, alpha) in [(16usize, 0.5f64), (64, 0.5), (64, 2.0)] {
        let params = ProtocolParams {
            m,
            alpha_mag: alpha,
            osk_enabled: true,
            basis_keystream: KeystreamKind::Counter { nonce: 0 },
            osk_keystream: KeystreamKind::Counter { nonce: 0 },
        };
        let chi = eve_channel_holevo(&params, AttackView::Kpa)?;
        let bound = minentropy_lower_bound(1.0, chi)?;
        println!("  M = {m:>3}, alpha = {alpha:.1}: chi = {chi:.4} -> Hmin >= {bound:.4} bits");
    }

    println!("\nShannon-limit check (equivocation vs key entropy):");
    for (h_xy, h_k) in [(3.0, 8.0), (9.0, 8.0), (1024.0, 16.0)] {
        let verdict = match shannon_limit_check(h_xy, h_k)? {
            ShannonLimit::WithinLimit => "within limit",
            ShannonLimit::Lifted => "LIFTED",
        };
        println!("  H(X|Y) = {h_xy:>7.1}, H(K) = {h_k:>5.1}  ->  {verdict}");
    }
    println!("\nWith OSK the per-bit equivocation is a full bit, so any plaintext");
    println!("longer than the key lifts the impossibility bound.");
    Ok(())
}
