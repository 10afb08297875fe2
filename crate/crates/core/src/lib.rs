//! Bayes factors computed directly from observed test statistics.
//!
//! The library answers one question in several guises: given a realized test
//! statistic (a t-ratio, a binomial count, an F-statistic), how strongly does
//! it support a sharp null hypothesis against a composite alternative? The
//! alternative is specified through the predictive spread of the statistic
//! rather than through parameter-space priors, which makes the resulting
//! Bayes factors easy to elicit and easy to audit.
//!
//! Modules:
//!
//! - [`numerics`] — special functions, adaptive quadrature, root finding.
//! - [`evidence`] — shared evidence types, odds conversions, likelihood-ratio
//!   bounds, and the threshold decision rule.
//! - [`normal_means`] — t-ratio Bayes factors under normal and Cauchy priors,
//!   predictive calibration, and the diffuse-prior sweep.
//! - [`binomial`] — coin-tossing Bayes factors and prior-free bounds.
//! - [`regression`] — F-statistic Bayes factors for nested linear models.
//! - [`simulate`] — seeded Monte Carlo reproduction of the classical-vs-Bayes
//!   discrepancies (band occupancy, rejection audits, repeated looks).
//!
//! All evidence is oriented as BF01 = p(data | H0) / p(data | H1) and carried
//! in log space internally. Simulation is deterministic for a fixed seed
//! under any number of worker threads; the `parallel` feature (on by
//! default) enables a rayon-backed replication loop with a sequential
//! fallback that produces bit-identical output.

use thiserror::Error;

pub mod binomial;
pub mod evidence;
pub mod normal_means;
pub mod numerics;
pub mod regression;
pub mod simulate;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature exhausted its subdivision budget before reaching tolerance.
    /// Carries the best estimate and the remaining error bound.
    #[error("quadrature did not converge: best estimate {estimate}, error bound {error_bound}")]
    Convergence { estimate: f64, error_bound: f64 },

    /// Root finder was given a bracket without a sign change.
    #[error("no sign change over bracket [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    /// Prior shape the requested formula does not cover.
    #[error("unsupported prior: {0}")]
    UnsupportedPrior(String),

    /// Prior that collapses to a point where a proper spread is required.
    #[error("degenerate prior: {0}")]
    DegeneratePrior(String),

    /// Assessed predictive interval tighter than the null's own sampling
    /// spread (implied spread factor below one).
    #[error("infeasible assessment: implied spread factor {a} is below 1")]
    InfeasibleAssessment { a: f64 },

    /// Calibration root search failed.
    #[error("calibration failed: {0}")]
    Calibration(String),

    /// A conditional fraction was requested over an empty subset.
    /// Carries the counts that made it undefined.
    #[error("fraction undefined: {matching} matching records out of {total}")]
    UndefinedFraction { matching: u64, total: u64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
