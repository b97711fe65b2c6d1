use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HistogramError {
    #[error("histogram is empty")]
    Empty,
    #[error("degree keys must be at least 1")]
    ZeroDegree,
    #[error("count for degree {0} must be at least 1")]
    ZeroCount(u64),
}

/// Number of items (vertices, or hyperedges for size histograms) per value.
/// Zero values are not recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeHistogram {
    counts: BTreeMap<u64, u64>,
    total_vertices: u64,
    total_degree: u64,
}

impl DegreeHistogram {
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        let mut hist = DegreeHistogram::default();
        for k in values.into_iter().filter(|&k| k > 0) {
            *hist.counts.entry(k).or_insert(0) += 1;
            hist.total_vertices += 1;
            hist.total_degree += k;
        }
        hist
    }

    pub fn from_counts(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, HistogramError> {
        let mut hist = DegreeHistogram::default();
        for (k, c) in pairs {
            if k == 0 {
                return Err(HistogramError::ZeroDegree);
            }
            if c == 0 {
                return Err(HistogramError::ZeroCount(k));
            }
            *hist.counts.entry(k).or_insert(0) += c;
            hist.total_vertices += c;
            hist.total_degree += k * c;
        }
        Ok(hist)
    }

    /// `(k, count)` in ascending `k`.
    pub fn counts(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn count(&self, k: u64) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn total_vertices(&self) -> u64 {
        self.total_vertices
    }

    pub fn total_degree(&self) -> u64 {
        self.total_degree
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.counts.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn mean(&self) -> f64 {
        self.total_degree as f64 / self.total_vertices as f64
    }

    /// Keeps only values `>= min`.
    pub fn at_least(&self, min: u64) -> DegreeHistogram {
        let pairs = self.counts.range(min..).map(|(&k, &c)| (k, c));
        DegreeHistogram::from_counts(pairs).expect("subset of a valid histogram")
    }

    /// Every count multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> DegreeHistogram {
        assert!(factor > 0);
        DegreeHistogram::from_counts(self.counts().map(|(k, c)| (k, c * factor)))
            .expect("scaling keeps counts positive")
    }

    /// Merges counts of `other` into `self`.
    pub fn merge(&mut self, other: &DegreeHistogram) {
        for (k, c) in other.counts() {
            *self.counts.entry(k).or_insert(0) += c;
        }
        self.total_vertices += other.total_vertices;
        self.total_degree += other.total_degree;
    }
}

/// `(k, P[deg >= k])` for every integer k from the smallest to the largest
/// present degree.
pub fn ccdf(hist: &DegreeHistogram) -> Result<Vec<(u64, f64)>, HistogramError> {
    let (lo, hi) = match (hist.min_degree(), hist.max_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(HistogramError::Empty),
    };
    let n = hist.total_vertices() as f64;
    let mut remaining = hist.total_vertices();
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    for k in lo..=hi {
        out.push((k, remaining as f64 / n));
        remaining -= hist.count(k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hist(pairs: &[(u64, u64)]) -> DegreeHistogram {
        DegreeHistogram::from_counts(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn ccdf_examples() {
        assert_eq!(
            ccdf(&hist(&[(1, 2), (3, 2)])).unwrap(),
            vec![(1, 1.0), (2, 0.5), (3, 0.5)]
        );
        assert_eq!(ccdf(&hist(&[(5, 10)])).unwrap(), vec![(5, 1.0)]);
        assert_eq!(
            ccdf(&hist(&[(1, 1), (2, 1), (3, 1), (4, 1)])).unwrap(),
            vec![(1, 1.0), (2, 0.75), (3, 0.5), (4, 0.25)]
        );
        assert_eq!(ccdf(&DegreeHistogram::default()), Err(HistogramError::Empty));
    }

    #[test]
    fn totals_and_validation() {
        let h = DegreeHistogram::from_values([0, 2, 3, 3]);
        assert_eq!(h.counts().collect::<Vec<_>>(), vec![(2, 1), (3, 2)]);
        assert_eq!((h.total_vertices(), h.total_degree()), (3, 8));
        assert_eq!(DegreeHistogram::from_counts([(0, 1)]), Err(HistogramError::ZeroDegree));
        assert_eq!(
            DegreeHistogram::from_counts([(4, 0)]),
            Err(HistogramError::ZeroCount(4))
        );
        assert_eq!(h.at_least(3).counts().collect::<Vec<_>>(), vec![(3, 2)]);
        assert_eq!(h.scaled(3).total_vertices(), 9);
        let mut m = h.clone();
        m.merge(&h);
        assert_eq!(m, h.scaled(2));
    }
}
