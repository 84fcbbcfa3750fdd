//! Giant-component robustness: after any deletion of k-1 vertices, a
//! component containing all but a logarithmic number of leftover vertices
//! should remain. Exhaustive over deletion sets, so small n only.

use rayon::prelude::*;
use serde::Serialize;

use hyperproc::{robust_giant_component, sample_gnm, thresholds, Seed};

use super::{RunError, TOOL_VERSION};
use crate::config::ExperimentConfig;
use crate::stats::Estimate;
use crate::tolerances::{notes_for, ToleranceNote};

#[derive(Debug, Clone, Serialize)]
pub struct GiantTrial {
    pub trial: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GiantSummary {
    pub config: ExperimentConfig,
    pub tool_version: &'static str,
    pub tolerances: Vec<ToleranceNote>,
    pub omega: f64,
    pub m_low: u64,
    pub budget: u32,
    pub fraction: Estimate,
    pub trials: Vec<GiantTrial>,
}

pub fn run_property_q(config: &ExperimentConfig) -> Result<GiantSummary, RunError> {
    let (n, d, k) = (config.n, config.d, config.k);
    let omega = config
        .effective_omega()
        .expect("validated before running");
    let params = thresholds(n, d, k, 0.0, omega)?;
    let m_low = params.window_low;
    let budget = config
        .budget
        .unwrap_or_else(|| (n as f64).ln().ceil().max(0.0) as u32);
    let trials: Result<Vec<GiantTrial>, RunError> = (0..config.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let h = sample_gnm(n, d, m_low, Seed::new(config.master_seed, trial))?;
            let holds = robust_giant_component(&h, k, Some(budget))?;
            Ok(GiantTrial { trial, holds })
        })
        .collect();
    let trials = trials?;
    let total = trials.len() as u64;
    let holding = trials.iter().filter(|t| t.holds).count() as u64;
    Ok(GiantSummary {
        config: config.clone(),
        tool_version: TOOL_VERSION,
        tolerances: notes_for("property-q"),
        omega,
        m_low,
        budget,
        fraction: Estimate::from_counts(holding, total),
        trials,
    })
}
