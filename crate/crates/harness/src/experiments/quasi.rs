//! Quasi-disjointness profile at the low window edge: low-degree vertices
//! should have fully spread incident edges, and every vertex of degree at
//! least k should pack k edges meeting only at itself.

use rayon::prelude::*;
use serde::Serialize;

use hyperproc::{quasi_profile, sample_gnm, thresholds, Seed};

use super::{RunError, TOOL_VERSION};
use crate::config::ExperimentConfig;
use crate::stats::Estimate;
use crate::tolerances::{notes_for, ToleranceNote};

#[derive(Debug, Clone, Serialize)]
pub struct QuasiTrial {
    pub trial: u64,
    /// Vertices whose maximum quasi-disjoint size is at most k-1 while
    /// their degree strictly exceeds it.
    pub bad_mass: u64,
    /// Every vertex of degree >= k has a quasi-disjoint set of size >= k.
    pub degree_k_packing_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiSummary {
    pub config: ExperimentConfig,
    pub tool_version: &'static str,
    pub tolerances: Vec<ToleranceNote>,
    pub omega: f64,
    pub m_low: u64,
    pub zero_bad_fraction: Estimate,
    pub packing_fraction: Estimate,
    pub trials: Vec<QuasiTrial>,
}

pub fn run_quasi_disjoint(config: &ExperimentConfig) -> Result<QuasiSummary, RunError> {
    let (n, d, k) = (config.n, config.d, config.k);
    let omega = config
        .effective_omega()
        .expect("validated before running");
    let params = thresholds(n, d, k, 0.0, omega)?;
    let m_low = params.window_low;
    let trials: Result<Vec<QuasiTrial>, RunError> = (0..config.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let h = sample_gnm(n, d, m_low, Seed::new(config.master_seed, trial))?;
            let profile = quasi_profile(&h)?;
            debug_assert_eq!(profile.total(), n as u64);
            let bad_mass = profile.bad_mass(k - 1);
            let degree_k_packing_ok =
                profile.min_packing_at_degree(k).is_none_or(|j| j >= k);
            Ok(QuasiTrial {
                trial,
                bad_mass,
                degree_k_packing_ok,
            })
        })
        .collect();
    let trials = trials?;
    let total = trials.len() as u64;
    let zero_bad = trials.iter().filter(|t| t.bad_mass == 0).count() as u64;
    let packing = trials.iter().filter(|t| t.degree_k_packing_ok).count() as u64;
    Ok(QuasiSummary {
        config: config.clone(),
        tool_version: TOOL_VERSION,
        tolerances: notes_for("quasi-disjoint"),
        omega,
        m_low,
        zero_bad_fraction: Estimate::from_counts(zero_bad, total),
        packing_fraction: Estimate::from_counts(packing, total),
        trials,
    })
}
