//! Experiment drivers: parallel trials, order-independent aggregation.
//!
//! Every trial derives its generator from `(master_seed, slot)` where the
//! slot is a function of the trial index alone, so results are identical
//! no matter how the work pool schedules them.

mod giant;
mod hitting;
mod poisson;
mod quasi;
mod sweep;

pub use giant::{run_property_q, GiantSummary, GiantTrial};
pub use hitting::{run_hitting_times, HittingSummary, HittingTrial};
pub use poisson::{run_poisson_count, PoissonSummary, PoissonTrial};
pub use quasi::{run_quasi_disjoint, QuasiSummary, QuasiTrial};
pub use sweep::{run_threshold_sweep, SweepPoint, SweepSummary};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Model(#[from] hyperproc::ModelError),
    #[error(transparent)]
    Structure(#[from] hyperproc::StructureError),
    #[error(transparent)]
    Connectivity(#[from] hyperproc::ConnectivityError),
    #[error(transparent)]
    Analytics(#[from] hyperproc::AnalyticsError),
    #[error(transparent)]
    Build(#[from] hyperproc::BuildError),
}

pub(crate) const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
