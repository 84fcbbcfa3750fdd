//! Law of the degree-(k-1) vertex count at the critical density, compared
//! in total variation to the Poisson law with the exact finite-n mean and
//! with the asymptotic mean, plus the count window and min-degree checks
//! at the window edges.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use hyperproc::{exact_expected_deg_count, poisson_pmf, sample_gnm, thresholds, Seed};

use super::{RunError, TOOL_VERSION};
use crate::config::ExperimentConfig;
use crate::stats::{mean_and_se, total_variation, Estimate};
use crate::tolerances::{notes_for, ToleranceNote};

#[derive(Debug, Clone, Serialize)]
pub struct PoissonTrial {
    pub trial: u64,
    /// Degree-(k-1) vertex count at the critical edge count.
    pub count_at_c: u64,
    /// Same count at the low window edge.
    pub count_at_low: u64,
    pub min_degree_at_low: u32,
    /// Same count at the high window edge.
    pub count_at_high: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PoissonSummary {
    pub config: ExperimentConfig,
    pub tool_version: &'static str,
    pub tolerances: Vec<ToleranceNote>,
    pub omega: f64,
    pub m_at_c: u64,
    pub window_low: u64,
    pub window_high: u64,
    /// Exact hypergeometric expectation of the count at `m_at_c`.
    pub exact_mean: f64,
    /// `exp(-c) / (k-1)!`.
    pub asymptotic_mean: f64,
    pub empirical_mean: f64,
    pub empirical_se: f64,
    pub tv_exact: f64,
    pub tv_asymptotic: f64,
    pub histogram: BTreeMap<u64, u64>,
    /// Count at the low edge inside `[e^w / 2(k-1)!, 3 e^w / 2(k-1)!]`.
    pub window_fraction: Estimate,
    pub min_degree_is_k_minus_1: Estimate,
    pub zero_at_high: Estimate,
    pub trials: Vec<PoissonTrial>,
}

pub fn run_poisson_count(config: &ExperimentConfig) -> Result<PoissonSummary, RunError> {
    let (n, d, k) = (config.n, config.d, config.k);
    let omega = config
        .effective_omega()
        .expect("validated before running");
    let params = thresholds(n, d, k, config.c, omega)?;
    let (m_c, m_low, m_high) = (params.m_at_c, params.window_low, params.window_high);
    let trials: Result<Vec<PoissonTrial>, RunError> = (0..config.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let slot = trial * 3;
            let at_c = sample_gnm(n, d, m_c, Seed::new(config.master_seed, slot))?;
            let at_low = sample_gnm(n, d, m_low, Seed::new(config.master_seed, slot + 1))?;
            let at_high = sample_gnm(n, d, m_high, Seed::new(config.master_seed, slot + 2))?;
            Ok(PoissonTrial {
                trial,
                count_at_c: at_c.count_with_degree(k - 1),
                count_at_low: at_low.count_with_degree(k - 1),
                min_degree_at_low: at_low.min_degree(),
                count_at_high: at_high.count_with_degree(k - 1),
            })
        })
        .collect();
    let trials = trials?;
    let total = trials.len() as u64;

    let mut histogram = BTreeMap::new();
    for t in &trials {
        *histogram.entry(t.count_at_c).or_insert(0u64) += 1;
    }
    let exact_mean = exact_expected_deg_count(n, d, m_c, k)?;
    let factorial: f64 = (1..k as u64).fold(1.0, |a, i| a * i as f64);
    let asymptotic_mean = (-config.c).exp() / factorial;
    let (empirical_mean, empirical_se) = mean_and_se(trials.iter().map(|t| t.count_at_c));
    let tv_exact = total_variation(&histogram, total, |x| poisson_pmf(exact_mean, x));
    let tv_asymptotic = total_variation(&histogram, total, |x| poisson_pmf(asymptotic_mean, x));

    let nominal = omega.exp() / factorial;
    let (win_lo, win_hi) = (0.5 * nominal, 1.5 * nominal);
    let in_window = trials
        .iter()
        .filter(|t| {
            let x = t.count_at_low as f64;
            win_lo <= x && x <= win_hi
        })
        .count() as u64;
    let min_deg_hits = trials
        .iter()
        .filter(|t| t.min_degree_at_low == k - 1)
        .count() as u64;
    let zero_high = trials.iter().filter(|t| t.count_at_high == 0).count() as u64;

    Ok(PoissonSummary {
        config: config.clone(),
        tool_version: TOOL_VERSION,
        tolerances: notes_for("poisson-count"),
        omega,
        m_at_c: m_c,
        window_low: m_low,
        window_high: m_high,
        exact_mean,
        asymptotic_mean,
        empirical_mean,
        empirical_se,
        tv_exact,
        tv_asymptotic,
        histogram,
        window_fraction: Estimate::from_counts(in_window, total),
        min_degree_is_k_minus_1: Estimate::from_counts(min_deg_hits, total),
        zero_at_high: Estimate::from_counts(zero_high, total),
        trials,
    })
}
