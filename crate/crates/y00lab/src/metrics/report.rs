//! The aggregated metrics report with its fixed JSON schema.

use serde::{Deserialize, Serialize};

use crate::attacks::{eve_data_error, gamma_masking, AttackView, ParamsSnapshot};
use crate::error::Result;
use crate::metrics::unicity::{eve_channel_holevo, CHI_FLOOR};
use crate::metrics::wiretap::{minentropy_lower_bound, wyner_secrecy_capacity};
use crate::metrics::normal_cdf;
use crate::protocol::ProtocolParams;
use crate::quantum::{holevo_information_mixed, CoherentAmplitude, SignalEnsemble};

use crate::attacks::key_detection_y00;

/// The fixed metric key set. Field names are the serialized JSON keys
/// and the sweep CSV columns; their order never changes within a major
/// version.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsValues {
    #[serde(rename = "chi_H_coa")]
    pub chi_h_coa: f64,
    #[serde(rename = "chi_H_kpa")]
    pub chi_h_kpa: f64,
    /// COA unicity lower bound in slots; `null` means infinite.
    pub n_q0_lower: Option<f64>,
    /// KPA unicity lower bound in slots; `null` means infinite.
    pub n_q1_lower: Option<f64>,
    pub eve_data_error: f64,
    pub bob_ber: f64,
    pub gamma: u32,
    pub pd_key: f64,
    pub c_secrecy: f64,
    pub hmin_lower: f64,
}

impl MetricsValues {
    pub const CSV_COLUMNS: [&'static str; 10] = [
        "chi_H_coa",
        "chi_H_kpa",
        "n_q0_lower",
        "n_q1_lower",
        "eve_data_error",
        "bob_ber",
        "gamma",
        "pd_key",
        "c_secrecy",
        "hmin_lower",
    ];

    pub fn csv_cells(&self) -> Vec<String> {
        fn num(v: f64) -> String {
            format!("{v:.12e}")
        }
        fn opt(v: Option<f64>) -> String {
            v.map(num).unwrap_or_else(|| "inf".into())
        }
        vec![
            num(self.chi_h_coa),
            num(self.chi_h_kpa),
            opt(self.n_q0_lower),
            opt(self.n_q1_lower),
            num(self.eve_data_error),
            num(self.bob_ber),
            self.gamma.to_string(),
            num(self.pd_key),
            num(self.c_secrecy),
            num(self.hmin_lower),
        ]
    }
}

/// Named scalar metrics with the parameters that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub params: ParamsSnapshot,
    pub metrics: MetricsValues,
    pub notes: Vec<String>,
}

/// The two data-conditioned sub-ensembles on the 2M constellation: the
/// interleaved even/odd sublattices with OSK off (doubly symmetric mixed
/// states), or twice the full constellation with OSK on.
fn data_groups(params: &ProtocolParams) -> Result<[SignalEnsemble; 2]> {
    let two_m = params.constellation_size();
    let mut g0 = Vec::with_capacity(params.m);
    let mut g1 = Vec::with_capacity(params.m);
    for j in 0..two_m as u32 {
        let theta = params.phase_of_index(j);
        let amp = CoherentAmplitude::from_polar(params.alpha_mag, theta)?;
        if params.osk_enabled {
            // OSK equalizes the conditionals: both groups span all 2M points.
            g0.push(amp);
            g1.push(amp);
        } else if j % 2 == 0 {
            g0.push(amp);
        } else {
            g1.push(amp);
        }
    }
    Ok([SignalEnsemble::uniform(g0)?, SignalEnsemble::uniform(g1)?])
}

/// Evaluate the full metric set for one parameter point.
pub fn build_metrics_report(params: &ProtocolParams, keylen: u32) -> Result<MetricsReport> {
    params.validate()?;
    let gamma = gamma_masking(params)?;

    let chi_coa = eve_channel_holevo(params, AttackView::Coa)?;
    let chi_kpa = eve_channel_holevo(params, AttackView::Kpa)?;
    let bound = |chi: f64| -> Option<f64> {
        if chi > CHI_FLOOR {
            Some(f64::from(keylen) / chi)
        } else {
            None
        }
    };

    // Eve's data-channel Holevo information bounds what any measurement
    // can learn about the plaintext bit; it feeds the min-entropy bound.
    let [g0, g1] = data_groups(params)?;
    let chi_data = holevo_information_mixed(&[(g0, 0.5), (g1, 0.5)])?;

    // Gaussian wiretap baseline: Bob's homodyne SNR 4|α|² against Eve's
    // heterodyne SNR 2|α|².
    let alpha_sq = params.alpha_mag * params.alpha_mag;
    let c_secrecy = wyner_secrecy_capacity(4.0 * alpha_sq, 2.0 * alpha_sq)?;

    let metrics = MetricsValues {
        chi_h_coa: chi_coa,
        chi_h_kpa: chi_kpa,
        n_q0_lower: bound(chi_coa),
        n_q1_lower: bound(chi_kpa),
        eve_data_error: eve_data_error(params)?,
        bob_ber: normal_cdf(-2.0 * params.alpha_mag),
        gamma: gamma.value(),
        pd_key: key_detection_y00(keylen, params.m, gamma, params.osk_enabled)?,
        c_secrecy,
        hmin_lower: minentropy_lower_bound(1.0, chi_data)?,
    };

    let mut notes = vec![
        "COA ensemble prior: uniform over the 2M constellation".into(),
        "c_secrecy: Gaussian wiretap baseline, Bob homodyne SNR 4|a|^2 vs Eve heterodyne SNR 2|a|^2"
            .into(),
        "hmin_lower: H(X)=1 bit minus the Holevo information of Eve's data channel".into(),
    ];
    if !params.osk_enabled && gamma.value() < 2 {
        notes.push("pd_key degenerate: gamma < 2 with OSK off leaves no masking".into());
    }
    if metrics.n_q1_lower.is_none() || metrics.n_q0_lower.is_none() {
        notes.push(format!("unicity bound infinite: chi below {CHI_FLOOR:e}"));
    }

    Ok(MetricsReport {
        params: ParamsSnapshot {
            m: params.m,
            alpha: params.alpha_mag,
            osk: params.osk_enabled,
            keylen,
            gamma: gamma.value(),
        },
        metrics,
        notes,
    })
}
