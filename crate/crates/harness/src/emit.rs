//! Deterministic experiment output: a full nested JSON summary, a flat
//! CSV (one row per trial, or per grid point for sweeps), and two-column
//! plot data. Identical config and master seed reproduce every byte;
//! nothing time- or host-dependent is written.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;

use crate::experiments::{
    GiantSummary, HittingSummary, PoissonSummary, QuasiSummary, SweepSummary,
};

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Summary {
    Hitting(HittingSummary),
    Sweep(SweepSummary),
    Poisson(PoissonSummary),
    Quasi(QuasiSummary),
    Giant(GiantSummary),
}

impl Summary {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Summary::Hitting(_) => "hitting-times",
            Summary::Sweep(_) => "threshold-sweep",
            Summary::Poisson(_) => "poisson-count",
            Summary::Quasi(_) => "quasi-disjoint",
            Summary::Giant(_) => "property-q",
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("summaries serialize");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> String {
        match self {
            Summary::Hitting(s) => hitting_csv(s),
            Summary::Sweep(s) => sweep_csv(s),
            Summary::Poisson(s) => poisson_csv(s),
            Summary::Quasi(s) => quasi_csv(s),
            Summary::Giant(s) => giant_csv(s),
        }
    }

    /// Plot-ready two-column (or three-column) data files.
    pub fn plot_files(&self) -> Vec<(&'static str, String)> {
        match self {
            Summary::Sweep(s) => {
                let mut est = String::new();
                let mut lim = String::new();
                for p in &s.points {
                    let _ = writeln!(est, "{} {}", p.c, p.k_connected.estimate);
                    let _ = writeln!(lim, "{} {}", p.c, p.analytic_limit);
                }
                vec![
                    ("k_connected_vs_c.dat", est),
                    ("analytic_limit_vs_c.dat", lim),
                ]
            }
            Summary::Poisson(s) => {
                let mut pmf = String::new();
                let trials: u64 = s.histogram.values().sum();
                let max_x = s.histogram.keys().next_back().copied().unwrap_or(0) + 3;
                for x in 0..=max_x {
                    let emp = s.histogram.get(&x).copied().unwrap_or(0) as f64 / trials as f64;
                    let _ = writeln!(
                        pmf,
                        "{} {} {}",
                        x,
                        emp,
                        hyperproc::poisson_pmf(s.exact_mean, x)
                    );
                }
                vec![("count_pmf.dat", pmf)]
            }
            Summary::Hitting(s) => {
                let mut hist = String::new();
                for (gap, count) in &s.gap_histogram {
                    let _ = writeln!(hist, "{gap} {count}");
                }
                vec![("gap_histogram.dat", hist)]
            }
            _ => Vec::new(),
        }
    }
}

fn hitting_csv(s: &HittingSummary) -> String {
    let k = s.config.k;
    let mut out = String::from("trial");
    for j in 1..=k {
        let _ = write!(out, ",min_degree_step_{j}");
    }
    for j in 1..=k {
        let _ = write!(out, ",connect_step_{j}");
    }
    out.push_str(",equal,quasi_ok\n");
    for t in &s.trials {
        let _ = write!(out, "{}", t.trial);
        for v in &t.min_degree_steps {
            let _ = write!(out, ",{v}");
        }
        for v in &t.connect_steps {
            let _ = write!(out, ",{v}");
        }
        let _ = writeln!(out, ",{},{}", t.equal as u8, t.quasi_ok as u8);
    }
    out
}

fn sweep_csv(s: &SweepSummary) -> String {
    let mut out = String::from(
        "c,m,p,k_connected,k_connected_low,k_connected_high,min_degree_ge_k,lower_connected,upper_connected,gnp_k_connected,analytic_limit\n",
    );
    for p in &s.points {
        let gnp = p
            .gnp_k_connected
            .as_ref()
            .map(|e| e.estimate.to_string())
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            p.c,
            p.m,
            p.p,
            p.k_connected.estimate,
            p.k_connected.wilson_low,
            p.k_connected.wilson_high,
            p.min_degree_ge_k.estimate,
            p.lower_connected.estimate,
            p.upper_connected.estimate,
            gnp,
            p.analytic_limit
        );
    }
    out
}

fn poisson_csv(s: &PoissonSummary) -> String {
    let mut out =
        String::from("trial,count_at_c,count_at_low,min_degree_at_low,count_at_high\n");
    for t in &s.trials {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            t.trial, t.count_at_c, t.count_at_low, t.min_degree_at_low, t.count_at_high
        );
    }
    out
}

fn quasi_csv(s: &QuasiSummary) -> String {
    let mut out = String::from("trial,bad_mass,degree_k_packing_ok\n");
    for t in &s.trials {
        let _ = writeln!(out, "{},{},{}", t.trial, t.bad_mass, t.degree_k_packing_ok as u8);
    }
    out
}

fn giant_csv(s: &GiantSummary) -> String {
    let mut out = String::from("trial,holds\n");
    for t in &s.trials {
        let _ = writeln!(out, "{},{}", t.trial, t.holds as u8);
    }
    out
}

/// Writes `summary.json`, `rows.csv`, and the plot files into `dir`.
pub fn write_outputs(summary: &Summary, dir: &Path) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    let json_path = dir.join("summary.json");
    std::fs::write(&json_path, summary.to_json())
        .with_context(|| format!("writing {}", json_path.display()))?;
    let csv_path = dir.join("rows.csv");
    std::fs::write(&csv_path, summary.to_csv())
        .with_context(|| format!("writing {}", csv_path.display()))?;
    for (name, content) in summary.plot_files() {
        let path = dir.join(name);
        std::fs::write(&path, content)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
