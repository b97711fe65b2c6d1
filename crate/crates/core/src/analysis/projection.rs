//! Clique expansion of a hypergraph into its observed graph.

use crate::analysis::DegreeHistogram;
use crate::hypergraph::{Hypergraph, VertexId};

/// Undirected multigraph. Edges are stored as `(low, high)` pairs; a self
/// loop contributes 2 to its vertex's degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservedGraph {
    num_vertices: usize,
    edges: Vec<(VertexId, VertexId)>,
    simple: bool,
}

impl ObservedGraph {
    pub(crate) fn new(num_vertices: usize, edges: Vec<(VertexId, VertexId)>, simple: bool) -> Self {
        ObservedGraph {
            num_vertices,
            edges,
            simple,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.num_vertices];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_values(self.degrees())
    }

    /// 2|E| / |V|, zero for a graph without vertices.
    pub fn average_degree(&self) -> f64 {
        if self.num_vertices == 0 {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.num_vertices as f64
        }
    }

    /// The graph as a 2-uniform hypergraph (one two-member hyperedge per edge).
    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut h = Hypergraph::empty();
        for _ in 0..self.num_vertices {
            h.allocate_vertex();
        }
        for &(a, b) in &self.edges {
            h.push_edge_unchecked(&[a, b]);
        }
        h
    }
}

/// One edge per unordered pair of positions inside each hyperedge, so a
/// hyperedge {a, a, b} yields aa, ab, ab. With `simple`, duplicate pairs and
/// self pairs are dropped across the whole graph.
pub fn project(h: &Hypergraph, simple: bool) -> ObservedGraph {
    let pairs: usize = h.edges().map(|e| e.len() * e.len().saturating_sub(1) / 2).sum();
    let mut edges = Vec::with_capacity(pairs);
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                if !(simple && a == b) {
                    edges.push((a, b));
                }
            }
        }
    }
    if simple {
        edges.sort_unstable();
        edges.dedup();
    }
    ObservedGraph::new(h.num_vertices(), edges, simple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hyperedge;

    fn with_edges(n: u32, edges: &[&[VertexId]]) -> Hypergraph {
        let mut h = Hypergraph::new_initial(1).unwrap();
        for v in 1..n {
            h.add_hyperedge(&Hyperedge::new([v]).unwrap(), true).unwrap();
        }
        for e in edges {
            h.add_hyperedge(&Hyperedge::new(e.iter().copied()).unwrap(), false)
                .unwrap();
        }
        h
    }

    #[test]
    fn triangle() {
        let h = with_edges(3, &[&[0, 1, 2]]);
        assert_eq!(project(&h, false).edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn repeated_member_gives_loop_and_parallel_edges() {
        let h = with_edges(2, &[&[0, 0, 1]]);
        let g = project(&h, false);
        assert_eq!(g.edges(), &[(0, 0), (0, 1), (0, 1)]);
        assert_eq!(g.degrees(), vec![4, 2]);

        let s = project(&h, true);
        assert!(s.is_simple());
        assert_eq!(s.edges(), &[(0, 1)]);
    }

    #[test]
    fn simple_mode_dedups_across_edges() {
        let h = with_edges(3, &[&[0, 1, 2], &[0, 1], &[2, 1, 1]]);
        assert_eq!(project(&h, true).edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(project(&h, false).edges().len(), 3 + 1 + 3);
    }

    #[test]
    fn graph_as_hypergraph_keeps_degrees() {
        let h = with_edges(3, &[&[0, 1, 2], &[1, 1]]);
        let g = project(&h, false);
        let as_h = g.to_hypergraph();
        assert_eq!(as_h.degrees(), &g.degrees()[..]);
        assert_eq!(as_h.num_edges(), g.edges().len());
        assert!((g.average_degree() - 2.0 * 4.0 / 3.0).abs() < 1e-12);
    }
}
