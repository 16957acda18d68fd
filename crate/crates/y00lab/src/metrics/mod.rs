//! Information-theoretic metric calculators: Shannon entropies,
//! generalized unicity-distance lower bounds, randomization sweeps, and
//! the wiretap/QKD comparison formulas. All pure functions over
//! immutable inputs.

pub mod report;
pub mod unicity;
pub mod wiretap;

use crate::error::{Error, Result};

pub use report::{build_metrics_report, MetricsReport, MetricsValues};
pub use unicity::{
    eve_channel_holevo, optimize_randomization, unicity_lower_bound, RandomizationSweep,
    SweepRow, UnicityBound,
};
pub use wiretap::{
    minentropy_lower_bound, pinsker_bound, shannon_limit_check, wyner_secrecy_capacity,
    ShannonLimit,
};

/// Standard normal CDF Φ(x).
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2)
}

/// A discrete probability distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::domain("distribution must have at least one outcome"));
        }
        let mut sum = 0.0;
        for &p in &probs {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::domain(format!("invalid probability {p}")));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::domain(format!("probabilities sum to {sum}")));
        }
        Ok(Self { probs })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("distribution must have at least one outcome"));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// Shannon entropy in bits: `−Σ p log₂ p`.
pub fn shannon_entropy(d: &DiscreteDistribution) -> f64 {
    -d.probs()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.log2())
        .sum::<f64>()
}

/// Min-entropy in bits: `−log₂ max p`.
pub fn minentropy(d: &DiscreteDistribution) -> f64 {
    let max = d.probs().iter().cloned().fold(0.0f64, f64::max);
    -max.log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_pins() {
        let point = DiscreteDistribution::new(vec![1.0, 0.0, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&point), 0.0);

        let u8th = DiscreteDistribution::uniform(8).unwrap();
        assert!((shannon_entropy(&u8th) - 3.0).abs() < 1e-15);

        // {0.9, 0.1} → 0.4690 bits (direct evaluation).
        let skew = DiscreteDistribution::new(vec![0.9, 0.1]).unwrap();
        assert!((shannon_entropy(&skew) - 0.4689955935892812).abs() < 1e-12);
    }

    #[test]
    fn minentropy_pins() {
        let u16th = DiscreteDistribution::uniform(16).unwrap();
        assert!((minentropy(&u16th) - 4.0).abs() < 1e-12);

        let point = DiscreteDistribution::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(minentropy(&point), 0.0);

        let d = DiscreteDistribution::new(vec![0.5, 0.25, 0.25]).unwrap();
        assert!((minentropy(&d) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn minentropy_never_exceeds_shannon() {
        use rand::Rng;
        let mut rng = crate::rng::stream_rng(5, "dist", 0);
        for _ in 0..10_000 {
            let n = rng.gen_range(2..8usize);
            let mut raw: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() + 1e-9).collect();
            let sum: f64 = raw.iter().sum();
            for p in raw.iter_mut() {
                *p /= sum;
            }
            let total: f64 = raw.iter().sum();
            let last = raw.len() - 1;
            raw[last] += 1.0 - total;
            let d = DiscreteDistribution::new(raw).unwrap();
            assert!(minentropy(&d) <= shannon_entropy(&d) + 1e-12);
        }
    }

    #[test]
    fn normal_cdf_pins() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((normal_cdf(-2.0) - 0.02275013194817922).abs() < 1e-10);
        assert!((normal_cdf(-4.0) - 3.1671241833119965e-5).abs() < 1e-12);
    }
}
