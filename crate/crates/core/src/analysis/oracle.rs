//! Closed-form predictions for the limiting degree distribution.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("p must lie in (0, 1], got {0}")]
    Probability(f64),
    #[error("expected edge size mu={mu} must exceed p={p}")]
    MuNotAboveP { p: f64, mu: f64 },
    #[error("k_max must be at least 1")]
    EmptyRange,
}

fn check(p: f64, mu: f64) -> Result<(), OracleError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(OracleError::Probability(p));
    }
    // written negated so NaN is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(mu > p) {
        return Err(OracleError::MuNotAboveP { p, mu });
    }
    Ok(())
}

/// Power-law exponent β = 2 + p/(μ − p). With μ = 2 this is the graph value.
pub fn analytic_beta(p: f64, mu: f64) -> Result<f64, OracleError> {
    check(p, mu)?;
    Ok(2.0 + p / (mu - p))
}

/// Limiting fractions M_1..=M_{k_max} of degree-k vertices per time step:
/// M_1 = μp/(2μ − p), M_k = M_{k−1}(k − 1)/(k + μ/(μ − p)).
pub fn analytic_mk(p: f64, mu: f64, k_max: usize) -> Result<Vec<f64>, OracleError> {
    check(p, mu)?;
    if k_max == 0 {
        return Err(OracleError::EmptyRange);
    }
    let offset = mu / (mu - p);
    let mut out = Vec::with_capacity(k_max);
    out.push(mu * p / (2.0 * mu - p));
    for k in 2..=k_max {
        let prev = out[k - 2];
        out.push(prev * (k - 1) as f64 / (k as f64 + offset));
    }
    Ok(out)
}
