//! Threshold sweep: k-connectivity probability across density offsets,
//! against the analytic limit and the min-degree proxy.

use rayon::prelude::*;
use serde::Serialize;

use hyperproc::{
    is_k_connected, limit_prob_k_connected, sample_gnm, sample_gnp, thresholds, Hypergraph, Seed,
};

use super::{RunError, TOOL_VERSION};
use crate::config::ExperimentConfig;
use crate::stats::Estimate;
use crate::tolerances::{notes_for, ToleranceNote};

#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub c: f64,
    pub m: u64,
    pub p: f64,
    pub k_connected: Estimate,
    pub min_degree_ge_k: Estimate,
    /// (k-1)-connectivity; exact 1 when k = 1 (0-connectivity is vacuous).
    pub lower_connected: Estimate,
    /// (k+1)-connectivity.
    pub upper_connected: Estimate,
    /// k-connectivity under the independent model, when requested.
    pub gnp_k_connected: Option<Estimate>,
    pub analytic_limit: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub config: ExperimentConfig,
    pub tool_version: &'static str,
    pub tolerances: Vec<ToleranceNote>,
    pub points: Vec<SweepPoint>,
}

fn holds_at_level(h: &Hypergraph, j: u32) -> bool {
    j == 0 || is_k_connected(h, j).holds()
}

struct TrialBits {
    k_conn: bool,
    min_deg: bool,
    lower: bool,
    upper: bool,
    gnp_k_conn: Option<bool>,
}

pub fn run_threshold_sweep(config: &ExperimentConfig) -> Result<SweepSummary, RunError> {
    let (n, d, k) = (config.n, config.d, config.k);
    let grid = config.c_grid.clone().unwrap_or_default();
    let trials = config.trials as u64;
    let mut points = Vec::with_capacity(grid.len());
    for (pi, &c) in grid.iter().enumerate() {
        let params = thresholds(n, d, k, c, 1.0)?;
        let m = params.m_at_c;
        let p = params.p_at_c;
        let results: Result<Vec<TrialBits>, RunError> = (0..trials)
            .into_par_iter()
            .map(|ti| {
                let slot = (pi as u64 * trials + ti) * 2;
                let h = sample_gnm(n, d, m, Seed::new(config.master_seed, slot))?;
                let gnp_k_conn = if config.include_gnp {
                    let g = sample_gnp(n, d, p, Seed::new(config.master_seed, slot + 1))?;
                    Some(is_k_connected(&g, k).holds())
                } else {
                    None
                };
                Ok(TrialBits {
                    k_conn: is_k_connected(&h, k).holds(),
                    min_deg: h.min_degree() >= k,
                    lower: holds_at_level(&h, k - 1),
                    upper: holds_at_level(&h, k + 1),
                    gnp_k_conn,
                })
            })
            .collect();
        let results = results?;
        let count = |f: &dyn Fn(&TrialBits) -> bool| results.iter().filter(|t| f(t)).count() as u64;
        let gnp_k_connected = config.include_gnp.then(|| {
            Estimate::from_counts(count(&|t| t.gnp_k_conn == Some(true)), trials)
        });
        points.push(SweepPoint {
            c,
            m,
            p,
            k_connected: Estimate::from_counts(count(&|t| t.k_conn), trials),
            min_degree_ge_k: Estimate::from_counts(count(&|t| t.min_deg), trials),
            lower_connected: Estimate::from_counts(count(&|t| t.lower), trials),
            upper_connected: Estimate::from_counts(count(&|t| t.upper), trials),
            gnp_k_connected,
            analytic_limit: limit_prob_k_connected(c, k),
        });
    }
    Ok(SweepSummary {
        config: config.clone(),
        tool_version: TOOL_VERSION,
        tolerances: notes_for("threshold-sweep"),
        points,
    })
}
