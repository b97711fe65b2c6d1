//! Degree statistics, power-law fitting, analytic predictions and the
//! clique-expansion projection.

mod fit;
mod histogram;
mod oracle;
mod projection;
pub mod zeta;

pub use fit::{fit_loglog, fit_power_law, fit_power_law_with, Estimator, FitError, FitReport, KMin, MIN_TAIL};
pub use histogram::{ccdf, DegreeHistogram, HistogramError};
pub use oracle::{analytic_beta, analytic_mk, OracleError};
pub use projection::{project, ObservedGraph};
