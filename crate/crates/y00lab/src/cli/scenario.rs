//! Scenario and sweep configuration files.
//!
//! Everything an experiment needs lives in one structured TOML file;
//! the seed is mandatory so no run ever depends on the wall clock.

use rand::Rng;
use serde::Deserialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::protocol::keystream::{KeystreamKind, SecretKey};
use crate::protocol::{ChannelModel, ProtocolParams};
use crate::rng::stream_rng;

/// Attack selected by a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttackSelect {
    CoaData,
    KpaKey,
    CoaKey,
    Exhaustive,
}

/// Where the plaintext comes from.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case", deny_unknown_fields)]
pub enum PlaintextSpec {
    /// Uniform random bits derived from the scenario seed.
    Random { slots: usize },
    /// Bits read from a file ('0'/'1' characters; whitespace ignored).
    File { path: PathBuf },
    /// A fixed bit pattern used verbatim.
    Pattern { bits: String },
}

fn default_trials() -> u64 {
    1000
}

fn default_channel() -> ChannelModel {
    ChannelModel::Homodyne
}

fn default_attack() -> AttackSelect {
    AttackSelect::CoaData
}

fn default_plaintext() -> PlaintextSpec {
    PlaintextSpec::Random { slots: 1024 }
}

/// One reproducible experiment configuration.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Master seed; mandatory.
    pub seed: u64,
    /// Secret key length in bits.
    pub keylen: u32,
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default = "default_channel")]
    pub channel: ChannelModel,
    #[serde(default = "default_attack")]
    pub attack: AttackSelect,
    #[serde(default = "default_plaintext")]
    pub plaintext: PlaintextSpec,
    /// Known-plaintext slots for exhaustive search (defaults to keylen).
    pub known_plaintext_len: Option<usize>,
    pub out_dir: Option<PathBuf>,
    pub params: ProtocolParams,
}

impl Scenario {
    /// Load and validate a scenario; returns it with the SHA-256 of the
    /// file bytes for provenance.
    pub fn load(path: &Path) -> Result<(Self, String)> {
        let bytes = std::fs::read(path)
            .map_err(|e| Error::config(format!("cannot read scenario {}: {e}", path.display())))?;
        let hash = hex_digest(&bytes);
        let text = String::from_utf8(bytes)
            .map_err(|_| Error::config("scenario file is not valid UTF-8"))?;
        let scenario: Scenario =
            toml::from_str(&text).map_err(|e| Error::config(format!("scenario: {e}")))?;
        scenario.validate(path.parent().unwrap_or_else(|| Path::new(".")))?;
        Ok((scenario, hash))
    }

    fn validate(&self, base_dir: &Path) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::config("trials must be at least 1"));
        }
        if self.keylen < 1 || self.keylen > 64 {
            return Err(Error::config(format!(
                "keylen {} outside the supported range 1..=64",
                self.keylen
            )));
        }
        self.params
            .validate()
            .map_err(|e| Error::config(format!("params: {e}")))?;
        for (name, kind) in [
            ("basis_keystream", &self.params.basis_keystream),
            ("osk_keystream", &self.params.osk_keystream),
        ] {
            if let KeystreamKind::Lfsr { width, .. } = kind {
                if u32::from(*width) > self.keylen {
                    return Err(Error::config(format!(
                        "{name}: LFSR width {width} exceeds keylen {}",
                        self.keylen
                    )));
                }
            }
        }
        match &self.plaintext {
            PlaintextSpec::Random { slots } => {
                if *slots == 0 {
                    return Err(Error::config("plaintext.slots must be at least 1"));
                }
            }
            PlaintextSpec::File { path } => {
                let resolved = resolve(base_dir, path);
                if !resolved.is_file() {
                    return Err(Error::config(format!(
                        "plaintext.path {} does not exist",
                        resolved.display()
                    )));
                }
            }
            PlaintextSpec::Pattern { bits } => {
                if bits.is_empty() || !bits.chars().all(|c| c == '0' || c == '1') {
                    return Err(Error::config(
                        "plaintext.bits must be a nonempty string of 0/1 characters",
                    ));
                }
            }
        }
        if let Some(n) = self.known_plaintext_len {
            if n == 0 {
                return Err(Error::config("known_plaintext_len must be at least 1"));
            }
        }
        Ok(())
    }

    /// Deterministic secret key derived from the seed. For LFSR streams
    /// the register prefix is kept nonzero.
    pub fn secret_key(&self) -> Result<SecretKey> {
        let mut rng = stream_rng(self.seed, "secret-key", 0);
        let lfsr_width = match &self.params.basis_keystream {
            KeystreamKind::Lfsr { width, .. } => Some(*width as usize),
            KeystreamKind::Counter { .. } => None,
        };
        loop {
            let bits: Vec<u8> = (0..self.keylen).map(|_| rng.gen_range(0..=1u8)).collect();
            let key = SecretKey::from_bits(bits)?;
            if let Some(w) = lfsr_width {
                if key.prefix_value(w) == 0 {
                    continue;
                }
            }
            return Ok(key);
        }
    }

    /// Materialize the plaintext bits.
    pub fn plaintext_bits(&self, base_dir: &Path) -> Result<Vec<u8>> {
        match &self.plaintext {
            PlaintextSpec::Random { slots } => {
                let mut rng = stream_rng(self.seed, "plaintext", 0);
                Ok((0..*slots).map(|_| rng.gen_range(0..=1u8)).collect())
            }
            PlaintextSpec::File { path } => {
                let resolved = resolve(base_dir, path);
                let text = std::fs::read_to_string(&resolved)?;
                let bits: Vec<u8> = text
                    .chars()
                    .filter(|c| !c.is_whitespace() && *c != ',')
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        other => Err(Error::config(format!(
                            "plaintext file {} contains '{other}'",
                            resolved.display()
                        ))),
                    })
                    .collect::<Result<_>>()?;
                if bits.is_empty() {
                    return Err(Error::config("plaintext file holds no bits"));
                }
                Ok(bits)
            }
            PlaintextSpec::Pattern { bits } => {
                Ok(bits.chars().map(|c| if c == '1' { 1u8 } else { 0u8 }).collect())
            }
        }
    }
}

fn resolve(base: &Path, p: &Path) -> PathBuf {
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// A value a sweep axis can take.
#[derive(Debug, Clone, PartialEq)]
pub enum AxisValue {
    Int(i64),
    Float(f64),
    Bool(bool),
}

impl std::fmt::Display for AxisValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxisValue::Int(v) => write!(f, "{v}"),
            AxisValue::Float(v) => write!(f, "{v}"),
            AxisValue::Bool(v) => write!(f, "{v}"),
        }
    }
}

impl AxisValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            AxisValue::Int(v) => *v as f64,
            AxisValue::Float(v) => *v,
            AxisValue::Bool(v) => {
                if *v {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

const SWEEP_AXES: [&str; 4] = ["alpha", "keylen", "m", "osk"];

fn default_max_points() -> usize {
    4096
}

fn default_out_table() -> String {
    "sweep.csv".into()
}

/// A base scenario plus axes to sweep over (cartesian product).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub base: Scenario,
    /// Axis name → list of values. Valid names: m, alpha, osk, keylen.
    pub axes: BTreeMap<String, Vec<toml::Value>>,
    #[serde(default = "default_max_points")]
    pub max_points: usize,
    #[serde(default)]
    pub svg: bool,
    #[serde(default = "default_out_table")]
    pub out_table: String,
}

impl SweepSpec {
    pub fn load(path: &Path) -> Result<(Self, String)> {
        let bytes = std::fs::read(path)
            .map_err(|e| Error::config(format!("cannot read sweep spec {}: {e}", path.display())))?;
        let hash = hex_digest(&bytes);
        let text = String::from_utf8(bytes)
            .map_err(|_| Error::config("sweep spec is not valid UTF-8"))?;
        let spec: SweepSpec =
            toml::from_str(&text).map_err(|e| Error::config(format!("sweep spec: {e}")))?;
        spec.validate(path.parent().unwrap_or_else(|| Path::new(".")))?;
        Ok((spec, hash))
    }

    fn validate(&self, base_dir: &Path) -> Result<()> {
        self.base.validate(base_dir)?;
        if self.axes.is_empty() {
            return Err(Error::config("sweep needs at least one axis"));
        }
        for (name, values) in &self.axes {
            if !SWEEP_AXES.contains(&name.as_str()) {
                return Err(Error::config(format!(
                    "unknown sweep axis '{name}' (valid: {})",
                    SWEEP_AXES.join(", ")
                )));
            }
            if values.is_empty() {
                return Err(Error::config(format!("sweep axis '{name}' has no values")));
            }
        }
        Ok(())
    }

    /// Typed axis values in deterministic (name-sorted) order.
    pub fn typed_axes(&self) -> Result<Vec<(String, Vec<AxisValue>)>> {
        let mut out = Vec::new();
        for (name, values) in &self.axes {
            let mut typed = Vec::with_capacity(values.len());
            for v in values {
                let tv = match (name.as_str(), v) {
                    ("m" | "keylen", toml::Value::Integer(i)) => AxisValue::Int(*i),
                    ("alpha", toml::Value::Float(f)) => AxisValue::Float(*f),
                    ("alpha", toml::Value::Integer(i)) => AxisValue::Float(*i as f64),
                    ("osk", toml::Value::Boolean(b)) => AxisValue::Bool(*b),
                    _ => {
                        return Err(Error::config(format!(
                            "axis '{name}' has incompatible value {v}"
                        )))
                    }
                };
                typed.push(tv);
            }
            out.push((name.clone(), typed));
        }
        Ok(out)
    }

    /// Total grid size.
    pub fn grid_size(&self) -> usize {
        self.axes.values().map(|v| v.len().max(1)).product()
    }

    /// Apply one grid point to a copy of the base scenario.
    pub fn apply(&self, scenario: &mut Scenario, point: &[(String, AxisValue)]) -> Result<()> {
        for (name, value) in point {
            match (name.as_str(), value) {
                ("m", AxisValue::Int(v)) => scenario.params.m = *v as usize,
                ("alpha", av) => scenario.params.alpha_mag = av.as_f64(),
                ("osk", AxisValue::Bool(b)) => scenario.params.osk_enabled = *b,
                ("keylen", AxisValue::Int(v)) => scenario.keylen = *v as u32,
                _ => return Err(Error::config(format!("cannot apply axis '{name}'"))),
            }
        }
        scenario
            .params
            .validate()
            .map_err(|e| Error::config(format!("grid point invalid: {e}")))
    }
}
