//! Discrete power-law fitting of degree histograms.
//!
//! The default estimator maximises the exact likelihood of
//! `P(k) = k^-β / ζ(β, k_min)` on `k >= k_min`. The closed-form
//! continuity-corrected approximation is available too; it is biased for
//! small `k_min` and heavy exponents.

use thiserror::Error;

use super::histogram::DegreeHistogram;
use super::zeta::{hurwitz_zeta, hurwitz_zeta_with_derivative};

/// Smallest tail a fit will accept.
pub const MIN_TAIL: u64 = 10;

const BETA_FLOOR: f64 = 1.0 + 1e-9;
const BETA_CEILING: f64 = 200.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FitError {
    #[error("tail too small: {n_tail} samples with k >= {k_min}, need at least {MIN_TAIL}")]
    TailTooSmall { k_min: u64, n_tail: u64 },
    #[error("all tail degrees equal {0}; exponent is undefined")]
    Degenerate(u64),
    #[error("k_min must be at least 1")]
    ZeroKMin,
    #[error("no k_min candidate leaves a usable tail")]
    NoCandidate,
    #[error("log-log fit needs at least two distinct degrees >= {0}")]
    TooFewPoints(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KMin {
    Fixed(u64),
    /// Scan present degrees and keep the one minimising the KS distance.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Estimator {
    #[default]
    DiscreteMle,
    /// `1 + n / Σ ln(k / (k_min - 1/2))`
    ContinuityCorrected,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitReport {
    pub beta_hat: f64,
    pub k_min: u64,
    pub n_tail: u64,
    pub ks_stat: f64,
}

pub fn fit_power_law(hist: &DegreeHistogram, k_min: KMin) -> Result<FitReport, FitError> {
    fit_power_law_with(hist, k_min, Estimator::DiscreteMle)
}

pub fn fit_power_law_with(hist: &DegreeHistogram, k_min: KMin, estimator: Estimator) -> Result<FitReport, FitError> {
    let tail = Tail::new(hist);
    match k_min {
        KMin::Fixed(k) => tail.fit_at(k, estimator),
        KMin::Auto => {
            let mut best: Option<FitReport> = None;
            for (i, &(k, _)) in tail.points.iter().enumerate() {
                if tail.suffix_n[i] < MIN_TAIL {
                    break;
                }
                let Ok(report) = tail.fit_from(i, estimator) else {
                    continue;
                };
                if best.is_none_or(|b| report.ks_stat < b.ks_stat) {
                    best = Some(report);
                }
                debug_assert_eq!(report.k_min, k);
            }
            best.ok_or(FitError::NoCandidate)
        }
    }
}

/// Histogram points with suffix sums, shared across k_min candidates.
struct Tail {
    points: Vec<(u64, u64)>,
    suffix_n: Vec<u64>,
    suffix_ln: Vec<f64>,
}

impl Tail {
    fn new(hist: &DegreeHistogram) -> Self {
        let points: Vec<(u64, u64)> = hist.counts().collect();
        let mut suffix_n = vec![0; points.len() + 1];
        let mut suffix_ln = vec![0.0; points.len() + 1];
        for (i, &(k, c)) in points.iter().enumerate().rev() {
            suffix_n[i] = suffix_n[i + 1] + c;
            suffix_ln[i] = suffix_ln[i + 1] + c as f64 * (k as f64).ln();
        }
        Tail {
            points,
            suffix_n,
            suffix_ln,
        }
    }

    fn fit_at(&self, k_min: u64, estimator: Estimator) -> Result<FitReport, FitError> {
        if k_min == 0 {
            return Err(FitError::ZeroKMin);
        }
        let start = self.points.partition_point(|&(k, _)| k < k_min);
        let n_tail = self.suffix_n[start];
        if n_tail < MIN_TAIL {
            return Err(FitError::TailTooSmall { k_min, n_tail });
        }
        self.fit_range(start, k_min, estimator)
    }

    fn fit_from(&self, start: usize, estimator: Estimator) -> Result<FitReport, FitError> {
        self.fit_range(start, self.points[start].0, estimator)
    }

    fn fit_range(&self, start: usize, k_min: u64, estimator: Estimator) -> Result<FitReport, FitError> {
        let n_tail = self.suffix_n[start];
        if start + 1 == self.points.len() {
            return Err(FitError::Degenerate(self.points[start].0));
        }
        let mean_ln = self.suffix_ln[start] / n_tail as f64;
        let beta_hat = match estimator {
            Estimator::DiscreteMle => solve_discrete_mle(k_min, mean_ln).ok_or(FitError::Degenerate(k_min))?,
            Estimator::ContinuityCorrected => {
                let shift = (k_min as f64 - 0.5).ln();
                1.0 + 1.0 / (mean_ln - shift)
            }
        };
        let ks_stat = ks_distance(&self.points[start..], n_tail, k_min, beta_hat);
        Ok(FitReport {
            beta_hat,
            k_min,
            n_tail,
            ks_stat,
        })
    }
}

/// Solves E_β[ln k] = `mean_ln` for the zeta law on `k >= k_min`.
/// E_β[ln k] = -ζ'(β, k_min)/ζ(β, k_min) falls monotonically from +∞ at β→1
/// to ln k_min as β→∞.
fn solve_discrete_mle(k_min: u64, mean_ln: f64) -> Option<f64> {
    let q = k_min as f64;
    let score = |beta: f64| {
        let (z, dz) = hurwitz_zeta_with_derivative(beta, q);
        -dz / z - mean_ln
    };
    let mut lo = BETA_FLOOR;
    let mut hi = 2.0;
    while score(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > BETA_CEILING {
            return None;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if score(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 * hi {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Supremum distance between the empirical tail CDF and the fitted discrete
/// CDF, checked on both sides of every jump of the empirical CDF.
fn ks_distance(points: &[(u64, u64)], n_tail: u64, k_min: u64, beta: f64) -> f64 {
    let norm = hurwitz_zeta(beta, k_min as f64);
    let model_cdf = |k: u64| 1.0 - hurwitz_zeta(beta, (k + 1) as f64) / norm;
    let n = n_tail as f64;
    let mut seen = 0u64;
    let mut d: f64 = 0.0;
    for &(k, c) in points {
        if k > k_min {
            // empirical CDF is flat on [previous present degree, k)
            d = d.max((seen as f64 / n - model_cdf(k - 1)).abs());
        }
        seen += c;
        d = d.max((seen as f64 / n - model_cdf(k)).abs());
    }
    d.clamp(0.0, 1.0)
}

/// Exponent from a least-squares line through `ln(count_k / n_tail)` against
/// `ln k` over present degrees `k >= k_min`.
pub fn fit_loglog(hist: &DegreeHistogram, k_min: u64) -> Result<f64, FitError> {
    let pts: Vec<(f64, f64)> = hist
        .counts()
        .filter(|&(k, _)| k >= k_min)
        .map(|(k, c)| ((k as f64).ln(), (c as f64).ln()))
        .collect();
    if pts.len() < 2 {
        return Err(FitError::TooFewPoints(k_min));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(-sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Expected counts of a zeta law, rounded; a noiseless "sample".
    fn ideal(beta: f64, k_min: u64, n: f64, k_max: u64) -> DegreeHistogram {
        let z = hurwitz_zeta(beta, k_min as f64);
        let pairs = (k_min..=k_max)
            .map(|k| (k, (n * (k as f64).powf(-beta) / z).round() as u64))
            .filter(|&(_, c)| c > 0);
        DegreeHistogram::from_counts(pairs).unwrap()
    }

    #[test]
    fn recovers_exponent_of_ideal_counts() {
        for beta in [2.2, 2.5, 3.0, 4.66] {
            let h = ideal(beta, 3, 1e9, 100_000);
            let r = fit_power_law(&h, KMin::Fixed(3)).unwrap();
            assert!((r.beta_hat - beta).abs() < 2e-3, "{beta}: {r:?}");
            assert!(r.ks_stat < 1e-3);
        }
    }

    #[test]
    fn continuity_corrected_formula() {
        let h = DegreeHistogram::from_counts([(5, 6), (10, 4)]).unwrap();
        let r = fit_power_law_with(&h, KMin::Fixed(5), Estimator::ContinuityCorrected).unwrap();
        let s = 6.0 * (5.0f64 / 4.5).ln() + 4.0 * (10.0f64 / 4.5).ln();
        assert!((r.beta_hat - (1.0 + 10.0 / s)).abs() < 1e-12);
        assert_eq!((r.k_min, r.n_tail), (5, 10));
    }

    #[test]
    fn errors() {
        let equal = DegreeHistogram::from_counts([(4, 50)]).unwrap();
        assert_eq!(fit_power_law(&equal, KMin::Fixed(1)), Err(FitError::Degenerate(4)));
        assert_eq!(fit_power_law(&equal, KMin::Auto), Err(FitError::NoCandidate));

        let small = DegreeHistogram::from_counts([(1, 3), (2, 2), (3, 1), (4, 1), (5, 1)]).unwrap();
        assert_eq!(
            fit_power_law(&small, KMin::Fixed(1)),
            Err(FitError::TailTooSmall { k_min: 1, n_tail: 8 })
        );
        assert_eq!(fit_power_law(&small, KMin::Fixed(0)), Err(FitError::ZeroKMin));
        assert_eq!(fit_loglog(&small, 5), Err(FitError::TooFewPoints(5)));
    }

    #[test]
    fn duplicating_counts_keeps_the_estimate() {
        let h = ideal(2.7, 1, 1e5, 2000);
        let a = fit_power_law(&h, KMin::Fixed(5)).unwrap();
        let b = fit_power_law(&h.scaled(3), KMin::Fixed(5)).unwrap();
        assert!((a.beta_hat - b.beta_hat).abs() < 1e-10);
        assert_eq!(b.n_tail, 3 * a.n_tail);
    }

    #[test]
    fn auto_scan_skips_a_distorted_head() {
        use rand::SeedableRng;
        use rand_distr::{Distribution, Zeta};
        // zeta law conditioned on k >= 5, plus a flat head on 1..=4
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let law = Zeta::new(2.5).unwrap();
        let tail = std::iter::repeat_with(|| law.sample(&mut rng) as u64)
            .filter(|&k| k >= 5)
            .take(50_000);
        let mut h = DegreeHistogram::from_values(tail);
        h.merge(&DegreeHistogram::from_counts((1..5).map(|k| (k, 20_000))).unwrap());
        let r = fit_power_law(&h, KMin::Auto).unwrap();
        assert!(r.k_min >= 5 && r.k_min <= 20, "{r:?}");
        assert!((r.beta_hat - 2.5).abs() < 0.05, "{r:?}");
        let fixed = fit_power_law(&h, KMin::Fixed(1)).unwrap();
        assert!(fixed.ks_stat > r.ks_stat);
    }

    #[test]
    fn loglog_slope_of_exact_power() {
        let h = DegreeHistogram::from_counts((1..=50).map(|k| (k, 1_000_000_000 / (k * k * k)))).unwrap();
        assert!((fit_loglog(&h, 1).unwrap() - 3.0).abs() < 1e-3);
    }
}
