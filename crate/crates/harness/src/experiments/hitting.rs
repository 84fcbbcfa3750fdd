//! Stopping-time experiment: how often does the process become
//! k-connected at the very step its minimum degree reaches k, and do the
//! incident edges of every vertex spread out at that moment.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use hyperproc::{quasi_profile, stopping_times, Seed};

use super::{RunError, TOOL_VERSION};
use crate::config::ExperimentConfig;
use crate::stats::Estimate;
use crate::tolerances::{notes_for, ToleranceNote};

#[derive(Debug, Clone, Serialize)]
pub struct HittingTrial {
    pub trial: u64,
    /// First step with minimum degree >= j, for j = 1..=k.
    pub min_degree_steps: Vec<u64>,
    /// First step that is j-connected, for j = 1..=k.
    pub connect_steps: Vec<u64>,
    pub equal: bool,
    /// Every vertex of the stopped hypergraph has a quasi-disjoint set of
    /// at least k incident edges.
    pub quasi_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HittingSummary {
    pub config: ExperimentConfig,
    pub tool_version: &'static str,
    pub tolerances: Vec<ToleranceNote>,
    pub equal_fraction: Estimate,
    pub quasi_fraction: Estimate,
    /// Distribution of the step gap between the two stopping times.
    pub gap_histogram: BTreeMap<u64, u64>,
    pub trials: Vec<HittingTrial>,
}

pub fn run_hitting_times(config: &ExperimentConfig) -> Result<HittingSummary, RunError> {
    let (n, d, k) = (config.n, config.d, config.k);
    let trials: Result<Vec<HittingTrial>, RunError> = (0..config.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let trace = stopping_times(n, d, k, Seed::new(config.master_seed, trial))?;
            let tau_k = trace.min_degree_time(k);
            let t_k = trace.connectivity_time(k);
            let stopped = trace.hypergraph_at(tau_k);
            let profile = quasi_profile(&stopped)?;
            let quasi_ok = profile.min_packing_at_degree(0).is_none_or(|j| j >= k);
            Ok(HittingTrial {
                trial,
                min_degree_steps: (1..=k).map(|j| trace.min_degree_time(j)).collect(),
                connect_steps: (1..=k).map(|j| trace.connectivity_time(j)).collect(),
                equal: tau_k == t_k,
                quasi_ok,
            })
        })
        .collect();
    let trials = trials?;
    let total = trials.len() as u64;
    let equal = trials.iter().filter(|t| t.equal).count() as u64;
    let quasi = trials.iter().filter(|t| t.quasi_ok).count() as u64;
    let mut gap_histogram = BTreeMap::new();
    for t in &trials {
        let gap = t.connect_steps[(k - 1) as usize] - t.min_degree_steps[(k - 1) as usize];
        *gap_histogram.entry(gap).or_insert(0u64) += 1;
    }
    Ok(HittingSummary {
        config: config.clone(),
        tool_version: TOOL_VERSION,
        tolerances: notes_for("hitting-times"),
        equal_fraction: Estimate::from_counts(equal, total),
        quasi_fraction: Estimate::from_counts(quasi, total),
        gap_histogram,
        trials,
    })
}
