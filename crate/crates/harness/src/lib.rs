//! Experiment orchestration for the random hypergraph connectivity
//! laboratory: configuration, parallel trial execution, aggregation with
//! confidence intervals, and machine-readable output.

pub mod config;
pub mod emit;
pub mod experiments;
pub mod stats;
pub mod tolerances;

pub use config::{ConfigError, ExperimentConfig, ExperimentKind, OutputFormat};
pub use emit::{write_outputs, Summary};
pub use experiments::{
    run_hitting_times, run_poisson_count, run_property_q, run_quasi_disjoint,
    run_threshold_sweep, RunError,
};
pub use stats::{mean_and_se, total_variation, wilson_interval, Estimate};

/// Dispatches a validated config to its experiment driver.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Summary, RunError> {
    Ok(match config.kind {
        ExperimentKind::HittingTimes => Summary::Hitting(run_hitting_times(config)?),
        ExperimentKind::ThresholdSweep => Summary::Sweep(run_threshold_sweep(config)?),
        ExperimentKind::PoissonCount => Summary::Poisson(run_poisson_count(config)?),
        ExperimentKind::QuasiDisjoint => Summary::Quasi(run_quasi_disjoint(config)?),
        ExperimentKind::PropertyQ => Summary::Giant(run_property_q(config)?),
    })
}
