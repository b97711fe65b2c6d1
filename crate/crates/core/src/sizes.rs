//! Hyperedge cardinality distributions.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SizeDistError {
    #[error("edge sizes must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("empty size range: lo={lo} > hi={hi}")]
    EmptyRange { lo: usize, hi: usize },
    #[error("zipf exponent must be a finite real > 1, got {0}")]
    BadExponent(f64),
    #[error(
        "cannot parse size distribution {spec:?}: expected const:<d>, uniform:<lo>:<hi> or zipf:<exponent>:<lo>:<hi>"
    )]
    Syntax { spec: String },
}

/// Distribution of the cardinality Y_t of each arriving hyperedge.
#[derive(Debug, Clone, PartialEq)]
pub enum EdgeSizeDistribution {
    Constant(usize),
    /// Uniform over the integers `lo..=hi`.
    UniformInt {
        lo: usize,
        hi: usize,
    },
    /// `P(Y = k) ∝ k^-exponent` for `lo <= k <= hi`.
    TruncatedZipf {
        exponent: f64,
        lo: usize,
        hi: usize,
    },
}

impl EdgeSizeDistribution {
    pub fn constant(d: usize) -> Result<Self, SizeDistError> {
        let dist = EdgeSizeDistribution::Constant(d);
        dist.validate()?;
        Ok(dist)
    }

    pub fn uniform(lo: usize, hi: usize) -> Result<Self, SizeDistError> {
        let dist = EdgeSizeDistribution::UniformInt { lo, hi };
        dist.validate()?;
        Ok(dist)
    }

    pub fn zipf(exponent: f64, lo: usize, hi: usize) -> Result<Self, SizeDistError> {
        let dist = EdgeSizeDistribution::TruncatedZipf { exponent, lo, hi };
        dist.validate()?;
        Ok(dist)
    }

    pub fn validate(&self) -> Result<(), SizeDistError> {
        match *self {
            EdgeSizeDistribution::Constant(d) if d < 2 => Err(SizeDistError::TooSmall(d)),
            EdgeSizeDistribution::Constant(_) => Ok(()),
            EdgeSizeDistribution::UniformInt { lo, hi } => check_range(lo, hi),
            EdgeSizeDistribution::TruncatedZipf { exponent, lo, hi } => {
                if !(exponent.is_finite() && exponent > 1.0) {
                    return Err(SizeDistError::BadExponent(exponent));
                }
                check_range(lo, hi)
            }
        }
    }

    /// Expected cardinality μ.
    pub fn mean(&self) -> f64 {
        match *self {
            EdgeSizeDistribution::Constant(d) => d as f64,
            EdgeSizeDistribution::UniformInt { lo, hi } => (lo + hi) as f64 / 2.0,
            EdgeSizeDistribution::TruncatedZipf { exponent, lo, hi } => {
                let (mut num, mut den) = (0.0, 0.0);
                for k in lo..=hi {
                    let w = (k as f64).powf(-exponent);
                    num += k as f64 * w;
                    den += w;
                }
                num / den
            }
        }
    }

    pub fn min_size(&self) -> usize {
        match *self {
            EdgeSizeDistribution::Constant(d) => d,
            EdgeSizeDistribution::UniformInt { lo, .. } | EdgeSizeDistribution::TruncatedZipf { lo, .. } => lo,
        }
    }

    pub fn max_size(&self) -> usize {
        match *self {
            EdgeSizeDistribution::Constant(d) => d,
            EdgeSizeDistribution::UniformInt { hi, .. } | EdgeSizeDistribution::TruncatedZipf { hi, .. } => hi,
        }
    }

    /// Builds a reusable sampler. Zipf variants precompute their CDF.
    pub fn sampler(&self) -> SizeSampler {
        match *self {
            EdgeSizeDistribution::Constant(d) => SizeSampler::Constant(d),
            EdgeSizeDistribution::UniformInt { lo, hi } => SizeSampler::Uniform { lo, hi },
            EdgeSizeDistribution::TruncatedZipf { exponent, lo, hi } => {
                let mut cdf = Vec::with_capacity(hi - lo + 1);
                let mut acc = 0.0;
                for k in lo..=hi {
                    acc += (k as f64).powf(-exponent);
                    cdf.push(acc);
                }
                for c in &mut cdf {
                    *c /= acc;
                }
                SizeSampler::Table { lo, cdf }
            }
        }
    }
}

fn check_range(lo: usize, hi: usize) -> Result<(), SizeDistError> {
    if lo > hi {
        Err(SizeDistError::EmptyRange { lo, hi })
    } else if lo < 2 {
        Err(SizeDistError::TooSmall(lo))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum SizeSampler {
    Constant(usize),
    Uniform { lo: usize, hi: usize },
    Table { lo: usize, cdf: Vec<f64> },
}

impl SizeSampler {
    /// Constant sizes consume no randomness.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        match self {
            SizeSampler::Constant(d) => *d,
            SizeSampler::Uniform { lo, hi } => rng.random_range(*lo as u64..=*hi as u64) as usize,
            SizeSampler::Table { lo, cdf } => {
                let u: f64 = rng.random();
                let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
                lo + idx
            }
        }
    }
}

impl FromStr for EdgeSizeDistribution {
    type Err = SizeDistError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let syntax = || SizeDistError::Syntax { spec: spec.to_string() };
        let parts: Vec<&str> = spec.trim().split(':').collect();
        let int = |s: &str| s.trim().parse::<usize>().map_err(|_| syntax());
        match parts.as_slice() {
            ["const", d] => EdgeSizeDistribution::constant(int(d)?),
            ["uniform", lo, hi] => EdgeSizeDistribution::uniform(int(lo)?, int(hi)?),
            ["zipf", e, lo, hi] => {
                let e: f64 = e.trim().parse().map_err(|_| syntax())?;
                EdgeSizeDistribution::zipf(e, int(lo)?, int(hi)?)
            }
            _ => Err(syntax()),
        }
    }
}

impl fmt::Display for EdgeSizeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeSizeDistribution::Constant(d) => write!(f, "const:{d}"),
            EdgeSizeDistribution::UniformInt { lo, hi } => write!(f, "uniform:{lo}:{hi}"),
            EdgeSizeDistribution::TruncatedZipf { exponent, lo, hi } => write!(f, "zipf:{exponent}:{lo}:{hi}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_grammar() {
        assert_eq!("const:3".parse(), Ok(EdgeSizeDistribution::Constant(3)));
        assert_eq!(
            "uniform:2:4".parse(),
            Ok(EdgeSizeDistribution::UniformInt { lo: 2, hi: 4 })
        );
        assert_eq!(
            "zipf:4.66:3:134".parse(),
            Ok(EdgeSizeDistribution::TruncatedZipf {
                exponent: 4.66,
                lo: 3,
                hi: 134
            })
        );
        assert_eq!(
            "const:1".parse::<EdgeSizeDistribution>(),
            Err(SizeDistError::TooSmall(1))
        );
        assert!(matches!(
            "uniform:5:3".parse::<EdgeSizeDistribution>(),
            Err(SizeDistError::EmptyRange { lo: 5, hi: 3 })
        ));
        assert!(matches!(
            "zipf:1.0:2:9".parse::<EdgeSizeDistribution>(),
            Err(SizeDistError::BadExponent(_))
        ));
        for bad in ["", "const", "const:x", "poisson:3", "uniform:2", "zipf:2:3"] {
            assert!(
                matches!(bad.parse::<EdgeSizeDistribution>(), Err(SizeDistError::Syntax { .. })),
                "{bad}"
            );
        }
        let d: EdgeSizeDistribution = "zipf:4.66:3:134".parse().unwrap();
        assert_eq!(d.to_string().parse(), Ok(d));
    }

    #[test]
    fn means() {
        assert_eq!(EdgeSizeDistribution::Constant(3).mean(), 3.0);
        assert_eq!(EdgeSizeDistribution::UniformInt { lo: 2, hi: 4 }.mean(), 3.0);
        // weights 1/4, 1/9 on {2, 3}
        let z = EdgeSizeDistribution::zipf(2.0, 2, 3).unwrap();
        let expected = (2.0 / 4.0 + 3.0 / 9.0) / (1.0 / 4.0 + 1.0 / 9.0);
        assert!((z.mean() - expected).abs() < 1e-12);
    }

    #[test]
    fn samples_stay_in_support_with_right_frequencies() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let z = EdgeSizeDistribution::zipf(2.0, 2, 3).unwrap().sampler();
        let n = 100_000;
        let mut twos = 0;
        for _ in 0..n {
            let k = z.sample(&mut rng);
            assert!((2..=3).contains(&k));
            twos += usize::from(k == 2);
        }
        let p2 = (1.0 / 4.0) / (1.0 / 4.0 + 1.0 / 9.0);
        let sd = (p2 * (1.0 - p2) / n as f64).sqrt();
        assert!((twos as f64 / n as f64 - p2).abs() < 5.0 * sd);

        let u = EdgeSizeDistribution::uniform(2, 4).unwrap().sampler();
        let mut seen = [0usize; 5];
        for _ in 0..3000 {
            seen[u.sample(&mut rng)] += 1;
        }
        assert_eq!(seen[..2], [0, 0]);
        assert!(seen[2..].iter().all(|&c| c > 800));
    }
}
