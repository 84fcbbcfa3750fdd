//! Experiment configuration: JSON file format mirrored by CLI flags,
//! flags winning on conflict.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error("scale guard: {0}")]
    ScaleGuard(String),
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse config {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    HittingTimes,
    ThresholdSweep,
    PoissonCount,
    QuasiDisjoint,
    PropertyQ,
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::HittingTimes => "hitting-times",
            ExperimentKind::ThresholdSweep => "threshold-sweep",
            ExperimentKind::PoissonCount => "poisson-count",
            ExperimentKind::QuasiDisjoint => "quasi-disjoint",
            ExperimentKind::PropertyQ => "property-q",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub trials: u32,
    pub master_seed: u64,
    /// Offset for the critical density (poisson-count).
    #[serde(default)]
    pub c: f64,
    /// Offsets for threshold sweeps.
    #[serde(default)]
    pub c_grid: Option<Vec<f64>>,
    /// Window half-width; `None` selects `ln ln ln n`.
    #[serde(default)]
    pub omega: Option<f64>,
    /// Also sample the independent model in sweeps.
    #[serde(default)]
    pub include_gnp: bool,
    /// Leftover-vertex budget for property-q; `None` selects `ceil(ln n)`.
    #[serde(default)]
    pub budget: Option<u32>,
    /// Scale-guard override (defaults depend on the kind).
    #[serde(default)]
    pub max_n: Option<u32>,
    #[serde(default)]
    pub format: OutputFormat,
}

impl ExperimentConfig {
    pub fn load(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.to_string(),
            source,
        })
    }

    /// Effective window half-width: the configured one, or `ln ln ln n`.
    pub fn effective_omega(&self) -> Result<f64, ConfigError> {
        match self.omega {
            Some(w) if w > 0.0 => Ok(w),
            Some(w) => Err(ConfigError::Invalid(format!(
                "omega must be positive, got {w}"
            ))),
            None => {
                let w = (self.n as f64).ln().ln().ln();
                if !w.is_finite() || w <= 0.0 {
                    Err(ConfigError::Invalid(format!(
                        "default omega = ln ln ln n is not positive at n = {}; pass omega explicitly",
                        self.n
                    )))
                } else {
                    Ok(w)
                }
            }
        }
    }

    /// Usage-level validation (exit code 1 territory).
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials < 1 {
            return Err(ConfigError::Invalid("trials must be >= 1".into()));
        }
        if self.d < 2 {
            return Err(ConfigError::Invalid(format!("need d >= 2, got {}", self.d)));
        }
        if self.k < 1 {
            return Err(ConfigError::Invalid(format!("need k >= 1, got {}", self.k)));
        }
        if self.n <= self.k || self.n < self.d {
            return Err(ConfigError::Invalid(format!(
                "need n > k and n >= d, got n={}, d={}, k={}",
                self.n, self.d, self.k
            )));
        }
        match self.kind {
            ExperimentKind::ThresholdSweep => {
                let grid = self.c_grid.as_ref().ok_or_else(|| {
                    ConfigError::Invalid("threshold-sweep requires a c grid".into())
                })?;
                if grid.is_empty() {
                    return Err(ConfigError::Invalid("c grid must be nonempty".into()));
                }
            }
            ExperimentKind::PoissonCount | ExperimentKind::QuasiDisjoint
            | ExperimentKind::PropertyQ => {
                self.effective_omega()?;
            }
            ExperimentKind::HittingTimes => {}
        }
        Ok(())
    }

    /// Scale-guard validation (exit code 2 territory).
    pub fn check_scale(&self) -> Result<(), ConfigError> {
        let default_cap = match self.kind {
            ExperimentKind::PropertyQ => 500,
            _ => 10_000,
        };
        let cap = self.max_n.unwrap_or(default_cap);
        if self.n > cap {
            return Err(ConfigError::ScaleGuard(format!(
                "n = {} exceeds the {} cap {} (override with max_n)",
                self.n,
                self.kind.name(),
                cap
            )));
        }
        if self.kind == ExperimentKind::PropertyQ && self.k > 3 {
            return Err(ConfigError::ScaleGuard(format!(
                "property-q is exhaustive in C(n, k-1); k = {} exceeds the cap 3",
                self.k
            )));
        }
        if hyperproc::binomial(self.n as u64, self.d as u64).is_none() {
            return Err(ConfigError::ScaleGuard(format!(
                "C({}, {}) does not fit in u64",
                self.n, self.d
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(kind: ExperimentKind) -> ExperimentConfig {
        ExperimentConfig {
            kind,
            n: 100,
            d: 3,
            k: 2,
            trials: 10,
            master_seed: 1,
            c: 0.0,
            c_grid: Some(vec![0.0]),
            omega: Some(2.0),
            include_gnp: false,
            budget: None,
            max_n: None,
            format: OutputFormat::Json,
        }
    }

    #[test]
    fn validation() {
        assert!(base(ExperimentKind::HittingTimes).validate().is_ok());
        let mut c = base(ExperimentKind::ThresholdSweep);
        c.c_grid = None;
        assert!(c.validate().is_err());
        let mut c = base(ExperimentKind::HittingTimes);
        c.trials = 0;
        assert!(c.validate().is_err());
        let mut c = base(ExperimentKind::PoissonCount);
        c.omega = None;
        c.n = 10; // ln ln ln 10 < 0
        assert!(c.validate().is_err());
    }

    #[test]
    fn scale_guards() {
        let mut c = base(ExperimentKind::PropertyQ);
        c.n = 800;
        assert!(c.check_scale().is_err());
        c.max_n = Some(1000);
        assert!(c.check_scale().is_ok());
        let mut c = base(ExperimentKind::HittingTimes);
        c.n = 20_000;
        assert!(c.check_scale().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let c = base(ExperimentKind::PoissonCount);
        let text = serde_json::to_string_pretty(&c).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert!(text.contains("poisson-count"));
    }
}
