//! Multiset hypergraph with occurrence-counted degrees.
//!
//! A vertex that appears `m` times in a hyperedge gains `m` units of degree,
//! so the total degree always equals the summed cardinality of all hyperedges.
//! Preferential draws are uniform picks from a flat token array in which every
//! vertex occurs once per unit of degree.

use rand::Rng;
use thiserror::Error;

use crate::analysis::DegreeHistogram;

pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("initial hyperedge cardinality must be at least 1")]
    EmptyInitialEdge,
    #[error("hyperedge must contain at least one vertex")]
    EmptyEdge,
    #[error("vertex id {id} out of range (hypergraph has {num_vertices} vertices)")]
    VertexOutOfRange { id: VertexId, num_vertices: usize },
    #[error("new-vertex hyperedge must contain fresh id {expected} exactly once, found {found} times")]
    FreshVertexCount { expected: VertexId, found: usize },
    #[error("cannot sample from a hypergraph with zero total degree")]
    EmptySampler,
}

/// An unordered multiset of vertex ids, kept in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge(Vec<VertexId>);

impl Hyperedge {
    pub fn new(members: impl IntoIterator<Item = VertexId>) -> Result<Self, HypergraphError> {
        let mut members: Vec<VertexId> = members.into_iter().collect();
        if members.is_empty() {
            return Err(HypergraphError::EmptyEdge);
        }
        members.sort_unstable();
        Ok(Hyperedge(members))
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn cardinality(&self) -> usize {
        self.0.len()
    }
}

/// Hyperedges are stored back to back in `members`, delimited by `offsets`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    num_vertices: usize,
    offsets: Vec<usize>,
    members: Vec<VertexId>,
    degree_tokens: Vec<VertexId>,
    degrees: Vec<u64>,
}

impl Hypergraph {
    /// A single vertex carrying one hyperedge made of `y0` copies of itself.
    pub fn new_initial(y0: usize) -> Result<Self, HypergraphError> {
        if y0 == 0 {
            return Err(HypergraphError::EmptyInitialEdge);
        }
        let mut h = Hypergraph::empty();
        h.allocate_vertex();
        h.push_edge_unchecked(&vec![0; y0]);
        Ok(h)
    }

    /// An empty hypergraph with no vertices.
    pub fn empty() -> Self {
        Hypergraph {
            num_vertices: 0,
            offsets: vec![0],
            members: Vec::new(),
            degree_tokens: Vec::new(),
            degrees: Vec::new(),
        }
    }

    /// Appends `edge`. With `new_vertex`, the edge must carry the id
    /// `num_vertices()` exactly once and that vertex is allocated.
    pub fn add_hyperedge(&mut self, edge: &Hyperedge, new_vertex: bool) -> Result<(), HypergraphError> {
        let fresh = self.num_vertices as VertexId;
        if new_vertex {
            let found = edge.members().iter().filter(|&&v| v == fresh).count();
            if found != 1 {
                return Err(HypergraphError::FreshVertexCount { expected: fresh, found });
            }
        }
        let limit = self.num_vertices + usize::from(new_vertex);
        if let Some(&id) = edge.members().iter().find(|&&v| v as usize >= limit) {
            return Err(HypergraphError::VertexOutOfRange {
                id,
                num_vertices: self.num_vertices,
            });
        }
        if new_vertex {
            self.allocate_vertex();
        }
        self.push_edge_unchecked(edge.members());
        Ok(())
    }

    pub(crate) fn allocate_vertex(&mut self) -> VertexId {
        let id = self.num_vertices as VertexId;
        self.num_vertices += 1;
        self.degrees.push(0);
        id
    }

    /// Caller guarantees every id is allocated and `members` is sorted.
    pub(crate) fn push_edge_unchecked(&mut self, members: &[VertexId]) {
        for &v in members {
            self.degrees[v as usize] += 1;
        }
        self.members.extend_from_slice(members);
        self.degree_tokens.extend_from_slice(members);
        self.offsets.push(self.members.len());
    }

    /// Draws a vertex with probability `deg(v) / total_degree()`.
    pub fn sample_preferential<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<VertexId, HypergraphError> {
        if self.degree_tokens.is_empty() {
            return Err(HypergraphError::EmptySampler);
        }
        Ok(self.draw_token(rng))
    }

    #[inline]
    pub(crate) fn draw_token<R: Rng + ?Sized>(&self, rng: &mut R) -> VertexId {
        // u64 range keeps the stream identical on 32- and 64-bit targets.
        let idx = rng.random_range(0..self.degree_tokens.len() as u64);
        self.degree_tokens[idx as usize]
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    /// S_t: the summed cardinality of every hyperedge.
    pub fn total_degree(&self) -> u64 {
        self.degree_tokens.len() as u64
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        self.degrees.get(v as usize).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree_tokens(&self) -> &[VertexId] {
        &self.degree_tokens
    }

    pub fn edge(&self, i: usize) -> &[VertexId] {
        &self.members[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Hyperedges in arrival order, each as a sorted slice.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[VertexId]> + '_ {
        self.offsets.windows(2).map(|w| &self.members[w[0]..w[1]])
    }

    /// Largest hyperedge cardinality, or 0 without edges.
    pub fn rank(&self) -> usize {
        self.edges().map(<[VertexId]>::len).max().unwrap_or(0)
    }

    /// Number of distinct hyperedges containing each vertex, ignoring
    /// repetitions inside an edge. Not the degree used by the growth model.
    pub fn incident_edge_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.num_vertices];
        for edge in self.edges() {
            let mut prev = None;
            for &v in edge {
                if prev != Some(v) {
                    counts[v as usize] += 1;
                    prev = Some(v);
                }
            }
        }
        counts
    }

    /// m_k: how many vertices have occurrence degree k.
    pub fn degree_histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_values(self.degrees.iter().copied())
    }

    /// Number of hyperedges per cardinality.
    pub fn edge_size_histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_values(self.edges().map(|e| e.len() as u64))
    }
}

impl Default for Hypergraph {
    fn default() -> Self {
        Hypergraph::empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn edge(ids: &[VertexId]) -> Hyperedge {
        Hyperedge::new(ids.iter().copied()).unwrap()
    }

    #[test]
    fn initial_hypergraph() {
        let h = Hypergraph::new_initial(3).unwrap();
        assert_eq!(h.num_vertices(), 1);
        assert_eq!(h.num_edges(), 1);
        assert_eq!(h.edge(0), &[0, 0, 0]);
        assert_eq!(h.degree(0), 3);
        assert_eq!(h.total_degree(), 3);

        let h = Hypergraph::new_initial(1).unwrap();
        assert_eq!((h.degree(0), h.total_degree()), (1, 1));
        let h = Hypergraph::new_initial(2).unwrap();
        assert_eq!((h.degree(0), h.total_degree()), (2, 2));

        assert_eq!(Hypergraph::new_initial(0), Err(HypergraphError::EmptyInitialEdge));
    }

    #[test]
    fn add_existing_and_fresh() {
        let mut h = Hypergraph::new_initial(3).unwrap();
        h.add_hyperedge(&edge(&[0, 0]), false).unwrap();
        assert_eq!((h.total_degree(), h.degree(0)), (5, 5));

        let mut h = Hypergraph::new_initial(1).unwrap();
        h.add_hyperedge(&edge(&[1, 0, 0]), true).unwrap();
        assert_eq!(h.num_vertices(), 2);
        assert_eq!(h.degree(1), 1);
        assert_eq!(h.degree(0), 3);
        assert_eq!(h.edge(1), &[0, 0, 1]);
    }

    #[test]
    fn add_rejects_bad_ids() {
        let mut h = Hypergraph::new_initial(2).unwrap();
        h.add_hyperedge(&edge(&[1, 0]), true).unwrap();
        h.add_hyperedge(&edge(&[2, 1]), true).unwrap();
        let before = h.clone();
        assert_eq!(
            h.add_hyperedge(&edge(&[7]), false),
            Err(HypergraphError::VertexOutOfRange { id: 7, num_vertices: 3 })
        );
        assert!(matches!(
            h.add_hyperedge(&edge(&[0, 1]), true),
            Err(HypergraphError::FreshVertexCount { expected: 3, found: 0 })
        ));
        assert!(matches!(
            h.add_hyperedge(&edge(&[3, 3]), true),
            Err(HypergraphError::FreshVertexCount { found: 2, .. })
        ));
        assert!(matches!(
            h.add_hyperedge(&edge(&[3, 4]), true),
            Err(HypergraphError::VertexOutOfRange { id: 4, .. })
        ));
        assert_eq!(h, before);
        assert_eq!(Hyperedge::new([]), Err(HypergraphError::EmptyEdge));
    }

    #[test]
    fn sampler_edge_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            Hypergraph::empty().sample_preferential(&mut rng),
            Err(HypergraphError::EmptySampler)
        );
        let h = Hypergraph::new_initial(5).unwrap();
        for _ in 0..100 {
            assert_eq!(h.sample_preferential(&mut rng).unwrap(), 0);
        }
    }

    #[test]
    fn sampler_is_symmetric_for_equal_degrees() {
        let mut h = Hypergraph::new_initial(2).unwrap();
        h.add_hyperedge(&edge(&[1]), true).unwrap();
        h.add_hyperedge(&edge(&[1]), false).unwrap();
        assert_eq!(h.degrees(), &[2, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 200_000;
        let hits = (0..n).filter(|_| h.sample_preferential(&mut rng).unwrap() == 0).count();
        let frac = hits as f64 / n as f64;
        // 5 standard deviations of a fair coin at n = 2e5
        assert!((frac - 0.5).abs() < 5.0 * (0.25 / n as f64).sqrt(), "{frac}");
    }

    #[test]
    fn histograms() {
        let h = Hypergraph::new_initial(3).unwrap();
        assert_eq!(h.degree_histogram().counts().collect::<Vec<_>>(), vec![(3, 1)]);

        let mut h = Hypergraph::new_initial(1).unwrap();
        h.add_hyperedge(&edge(&[1]), true).unwrap();
        assert_eq!(h.degree_histogram().counts().collect::<Vec<_>>(), vec![(1, 2)]);

        // degrees {2, 3, 3}
        let mut h = Hypergraph::new_initial(2).unwrap();
        h.add_hyperedge(&edge(&[1]), true).unwrap();
        h.add_hyperedge(&edge(&[2, 1, 1]), true).unwrap();
        h.add_hyperedge(&edge(&[2, 2]), false).unwrap();
        assert_eq!(h.degrees(), &[2, 3, 3]);
        let hist = h.degree_histogram();
        assert_eq!(hist.counts().collect::<Vec<_>>(), vec![(2, 1), (3, 2)]);
        assert_eq!(hist.total_vertices(), 3);
        assert_eq!(hist.total_degree(), h.total_degree());
    }

    #[test]
    fn edge_sizes() {
        let mut h = Hypergraph::new_initial(3).unwrap();
        h.add_hyperedge(&edge(&[0, 1]), true).unwrap();
        let sizes = h.edge_size_histogram();
        assert_eq!(sizes.counts().collect::<Vec<_>>(), vec![(2, 1), (3, 1)]);
        assert_eq!(h.rank(), 3);

        let h = Hypergraph::new_initial(2).unwrap();
        assert_eq!(h.edge_size_histogram().counts().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn incident_counts_ignore_repetition() {
        let mut h = Hypergraph::new_initial(3).unwrap();
        h.add_hyperedge(&edge(&[0, 0, 1]), true).unwrap();
        assert_eq!(h.degrees(), &[5, 1]);
        assert_eq!(h.incident_edge_counts(), vec![2, 1]);
    }
}
