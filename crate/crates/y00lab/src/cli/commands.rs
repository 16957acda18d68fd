//! Subcommand implementations. Every output file embeds the scenario
//! hash and tool version; identical scenario and seed give byte-identical
//! outputs at any thread count.

use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use super::scenario::{AttackSelect, AxisValue, Scenario, SweepSpec};
use super::svg;
use crate::attacks::{
    eve_key_receiver_error, gamma_masking, heterodyne_sample, simulate_exhaustive_kpa,
    AttackKind, AttackReport, AttackView, ExhaustiveConfig, ExhaustiveStats, KeyReceiver,
    ParamsSnapshot,
};
use crate::error::{Error, Result};
use crate::metrics::{build_metrics_report, MetricsReport, MetricsValues};
use crate::protocol::{constellation_bit, run_session, ProtocolParams};
use crate::quantum::{srm_symmetric_error, CoherentAmplitude};
use crate::rng::stream_rng;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub scenario_sha256: String,
    pub tool_version: String,
}

impl Provenance {
    pub fn new(sha: &str) -> Self {
        Self {
            scenario_sha256: sha.to_string(),
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    fn csv_comment(&self) -> String {
        format!(
            "# provenance: scenario_sha256={} tool_version={}\n",
            self.scenario_sha256, self.tool_version
        )
    }
}

fn write_text(path: &Path, content: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, content)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::numeric(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct MetricsFile<'a> {
    provenance: &'a Provenance,
    #[serde(flatten)]
    report: &'a MetricsReport,
}

/// `metrics`: evaluate the full metric set and write `metrics.json`.
pub fn cmd_metrics(scenario: &Scenario, sha: &str, out_dir: &Path) -> Result<PathBuf> {
    let report = build_metrics_report(&scenario.params, scenario.keylen)?;
    let provenance = Provenance::new(sha);
    let path = out_dir.join("metrics.json");
    write_text(
        &path,
        &json_line(&MetricsFile {
            provenance: &provenance,
            report: &report,
        })?,
    )?;

    let m = &report.metrics;
    println!("chi_H_coa      = {:.6} bits/slot", m.chi_h_coa);
    println!("chi_H_kpa      = {:.6} bits/slot", m.chi_h_kpa);
    println!("n_q0_lower     = {} slots", fmt_opt(m.n_q0_lower));
    println!("n_q1_lower     = {} slots", fmt_opt(m.n_q1_lower));
    println!("eve_data_error = {:.6}", m.eve_data_error);
    println!("bob_ber        = {:.6e}", m.bob_ber);
    println!("gamma          = {}", m.gamma);
    println!("pd_key         = {:.6e}", m.pd_key);
    println!("c_secrecy      = {:.6} bits/use", m.c_secrecy);
    println!("hmin_lower     = {:.6} bits", m.hmin_lower);
    Ok(path)
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.4}")).unwrap_or_else(|| "inf".into())
}

#[derive(Serialize)]
struct SimulateSummary<'a> {
    provenance: &'a Provenance,
    slots: usize,
    errors: usize,
    bob_ber_empirical: f64,
    ci95: f64,
    analytic_ber: f64,
}

/// `simulate`: run one session; write `transcript.csv` and
/// `simulate_summary.json`.
pub fn cmd_simulate(
    scenario: &Scenario,
    base_dir: &Path,
    sha: &str,
    out_dir: &Path,
) -> Result<PathBuf> {
    let key = scenario.secret_key()?;
    let plaintext = scenario.plaintext_bits(base_dir)?;
    let transcript = run_session(
        &key,
        &plaintext,
        &scenario.params,
        scenario.channel,
        scenario.seed,
    )?;
    let provenance = Provenance::new(sha);

    let csv_path = out_dir.join("transcript.csv");
    let mut csv = provenance.csv_comment();
    csv.push_str(&transcript.to_csv());
    write_text(&csv_path, &csv)?;

    let n = transcript.len();
    let errors = transcript.bit_errors();
    let ber = if n > 0 { errors as f64 / n as f64 } else { 0.0 };
    let ci95 = if n > 0 {
        1.96 * (ber * (1.0 - ber) / n as f64).sqrt()
    } else {
        0.0
    };
    let summary = SimulateSummary {
        provenance: &provenance,
        slots: n,
        errors,
        bob_ber_empirical: ber,
        ci95,
        analytic_ber: scenario.channel.analytic_ber(scenario.params.alpha_mag),
    };
    let summary_path = out_dir.join("simulate_summary.json");
    write_text(&summary_path, &json_line(&summary)?)?;
    println!(
        "slots={} errors={} bob_ber_empirical={:.6e} (analytic {:.6e})",
        n, errors, ber, summary.analytic_ber
    );
    Ok(summary_path)
}

#[derive(Serialize)]
struct AttackFile<'a> {
    provenance: &'a Provenance,
    #[serde(flatten)]
    report: &'a AttackReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<&'a ExhaustiveStats>,
}

/// Monte Carlo of the ciphertext-only data attack: heterodyne sampling
/// followed by nearest-point decision and the constellation bit label.
fn coa_data_empirical(params: &ProtocolParams, trials: u64, seed: u64) -> Result<f64> {
    let mut rng = stream_rng(seed, "coa-data-trial", 0);
    let two_m = params.constellation_size();
    let delta = params.delta();
    let mut errors = 0u64;
    for _ in 0..trials {
        let x: u8 = rand::Rng::gen_range(&mut rng, 0..=1);
        let m: u32 = rand::Rng::gen_range(&mut rng, 1..=params.m as u32);
        let osk_bit: u8 = if params.osk_enabled {
            rand::Rng::gen_range(&mut rng, 0..=1)
        } else {
            0
        };
        let rec = crate::protocol::encrypt_slot(x, m, osk_bit, params)?;
        let state = CoherentAmplitude::from_polar(params.alpha_mag, rec.theta)?;
        let z = heterodyne_sample(state, &mut rng).z;
        let measured = z.arg().rem_euclid(2.0 * PI);
        let j = (measured / delta).round() as usize % two_m;
        let decided = constellation_bit(j as u32, params.m);
        if decided != x {
            errors += 1;
        }
    }
    Ok(errors as f64 / trials as f64)
}

/// `attack`: evaluate the scenario's selected attack; write `attack.json`.
pub fn cmd_attack(scenario: &Scenario, sha: &str, out_dir: &Path) -> Result<PathBuf> {
    let params = &scenario.params;
    let trials = scenario.trials;
    let gamma = gamma_masking(params)?.value();
    let snapshot = ParamsSnapshot {
        m: params.m,
        alpha: params.alpha_mag,
        osk: params.osk_enabled,
        keylen: scenario.keylen,
        gamma,
    };
    let binomial_ci = |p: f64| 1.96 * (p * (1.0 - p) / trials as f64).sqrt();

    let (report, stats) = match scenario.attack {
        AttackSelect::CoaData => {
            let analytic = crate::attacks::eve_data_error(params)?;
            let empirical = coa_data_empirical(params, trials, scenario.seed)?;
            (
                AttackReport {
                    kind: AttackKind::CoaData,
                    analytic,
                    empirical,
                    trials,
                    ci95: binomial_ci(empirical),
                    params: snapshot,
                },
                None,
            )
        }
        AttackSelect::KpaKey | AttackSelect::CoaKey => {
            let (view, kind, l) = if scenario.attack == AttackSelect::KpaKey {
                (AttackView::Kpa, AttackKind::KpaKey, params.m)
            } else {
                (AttackView::Coa, AttackKind::CoaKey, params.constellation_size())
            };
            let analytic = srm_symmetric_error(l, params.alpha_mag)?;
            let empirical = eve_key_receiver_error(
                params,
                KeyReceiver::HeterodyneMary,
                view,
                trials,
                scenario.seed,
            )?;
            (
                AttackReport {
                    kind,
                    analytic,
                    empirical,
                    trials,
                    ci95: binomial_ci(empirical),
                    params: snapshot,
                },
                None,
            )
        }
        AttackSelect::Exhaustive => {
            if scenario.keylen > 16 {
                return Err(Error::Refused(format!(
                    "exhaustive mode requires keylen ≤ 16, got {}",
                    scenario.keylen
                )));
            }
            match &params.basis_keystream {
                crate::protocol::keystream::KeystreamKind::Lfsr { width, .. }
                    if u32::from(*width) == scenario.keylen => {}
                crate::protocol::keystream::KeystreamKind::Lfsr { width, .. } => {
                    return Err(Error::config(format!(
                        "exhaustive mode needs LFSR width ({width}) equal to keylen ({})",
                        scenario.keylen
                    )))
                }
                _ => {
                    return Err(Error::Refused(
                        "exhaustive mode requires an LFSR basis keystream".into(),
                    ))
                }
            }
            let cfg = ExhaustiveConfig {
                params: params.clone(),
                known_plaintext_len: scenario
                    .known_plaintext_len
                    .unwrap_or(scenario.keylen as usize),
                trials,
                seed: scenario.seed,
            };
            let (report, stats) = simulate_exhaustive_kpa(&cfg)?;
            (report, Some(stats))
        }
    };

    let provenance = Provenance::new(sha);
    let path = out_dir.join("attack.json");
    write_text(
        &path,
        &json_line(&AttackFile {
            provenance: &provenance,
            report: &report,
            stats: stats.as_ref(),
        })?,
    )?;
    println!(
        "attack={:?} analytic={:.6e} empirical={:.6e} trials={} ci95={:.3e}",
        report.kind, report.analytic, report.empirical, report.trials, report.ci95
    );
    if let Some(s) = stats {
        println!(
            "unique={:.4} mean_surviving={:.2} true_key_retained={:.4}",
            s.unique_probability, s.mean_surviving, s.true_key_retained
        );
    }
    Ok(path)
}

/// `sweep`: evaluate metrics across the grid; write the CSV table and
/// optional SVG charts.
pub fn cmd_sweep(spec: &SweepSpec, sha: &str, out_dir: &Path) -> Result<PathBuf> {
    let total = spec.grid_size();
    if total > spec.max_points {
        return Err(Error::Refused(format!(
            "sweep grid has {total} points, cap is {}",
            spec.max_points
        )));
    }
    let axes = spec.typed_axes()?;

    // Cartesian product in axis-sorted order, last axis fastest.
    let mut points: Vec<Vec<(String, AxisValue)>> = vec![Vec::new()];
    for (name, values) in &axes {
        let mut next = Vec::with_capacity(points.len() * values.len());
        for prefix in &points {
            for v in values {
                let mut p = prefix.clone();
                p.push((name.clone(), v.clone()));
                next.push(p);
            }
        }
        points = next;
    }

    let rows: Vec<(Vec<(String, AxisValue)>, MetricsValues)> = points
        .into_par_iter()
        .map(|point| -> Result<_> {
            let mut s = spec.base.clone();
            spec.apply(&mut s, &point)?;
            let report = build_metrics_report(&s.params, s.keylen)?;
            Ok((point, report.metrics))
        })
        .collect::<Result<Vec<_>>>()?;

    let provenance = Provenance::new(sha);
    let mut csv = provenance.csv_comment();
    let axis_names: Vec<&str> = axes.iter().map(|(n, _)| n.as_str()).collect();
    csv.push_str(&axis_names.join(","));
    if !axis_names.is_empty() {
        csv.push(',');
    }
    csv.push_str(&MetricsValues::CSV_COLUMNS.join(","));
    csv.push('\n');
    for (point, metrics) in &rows {
        let axis_cells: Vec<String> = point.iter().map(|(_, v)| v.to_string()).collect();
        csv.push_str(&axis_cells.join(","));
        if !axis_cells.is_empty() {
            csv.push(',');
        }
        csv.push_str(&metrics.csv_cells().join(","));
        csv.push('\n');
    }
    let table_path = out_dir.join(&spec.out_table);
    write_text(&table_path, &csv)?;
    println!("sweep rows: {}", rows.len());

    if spec.svg && axes.len() == 1 {
        let axis_name = &axes[0].0;
        let xs: Vec<f64> = rows.iter().map(|(p, _)| p[0].1.as_f64()).collect();
        let chi_series = vec![
            (
                "chi_H_kpa".to_string(),
                xs.iter().zip(&rows).map(|(&x, (_, m))| (x, m.chi_h_kpa)).collect(),
            ),
            (
                "chi_H_coa".to_string(),
                xs.iter().zip(&rows).map(|(&x, (_, m))| (x, m.chi_h_coa)).collect(),
            ),
        ];
        write_text(
            &out_dir.join("sweep_chi.svg"),
            &svg::line_chart("Eve channel Holevo capacity", axis_name, &chi_series),
        )?;

        let bound_series = vec![
            (
                "n_q1_lower".to_string(),
                xs.iter()
                    .zip(&rows)
                    .filter_map(|(&x, (_, m))| m.n_q1_lower.map(|b| (x, b)))
                    .collect::<Vec<_>>(),
            ),
            (
                "n_q0_lower".to_string(),
                xs.iter()
                    .zip(&rows)
                    .filter_map(|(&x, (_, m))| m.n_q0_lower.map(|b| (x, b)))
                    .collect::<Vec<_>>(),
            ),
        ];
        write_text(
            &out_dir.join("sweep_unicity.svg"),
            &svg::line_chart("Unicity-distance lower bounds", axis_name, &bound_series),
        )?;
    }
    Ok(table_path)
}
