//! The H(H₀, p, Y) growth process and the classic preferential-attachment
//! graph process used as a baseline.
//!
//! Every step consumes the random stream in a fixed order: the event bit,
//! then the hyperedge size, then the member draws. Runs are reproducible
//! from `(seed, stream)` on any target.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::analysis::ObservedGraph;
use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};
use crate::sizes::{EdgeSizeDistribution, SizeDistError, SizeSampler};

pub const DEFAULT_CAP_EXPONENT: f64 = 1.0 / 3.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("vertex-arrival probability p must lie in (0, 1], got {0}")]
    Probability(f64),
    #[error("initial cardinality y0 must be at least 1")]
    InitialSize,
    #[error("cap exponent must lie in (0, 1/2), got {0}")]
    CapExponent(f64),
    #[error("edges per step must be at least 1")]
    EdgesPerStep,
    #[error(transparent)]
    Size(#[from] SizeDistError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub p: f64,
    pub steps: u64,
    pub size_dist: EdgeSizeDistribution,
    pub y0: usize,
    pub seed: u64,
    /// Clamp Y_t into `[2, max(2, floor(t^cap_exponent))]`.
    pub enforce_cap: bool,
    pub cap_exponent: f64,
    /// ChaCha stream id; distinct streams give independent runs under one seed.
    pub stream: u64,
}

impl GeneratorConfig {
    pub fn new(p: f64, steps: u64, size_dist: EdgeSizeDistribution) -> Self {
        GeneratorConfig {
            p,
            steps,
            size_dist,
            y0: 2,
            seed: 0,
            enforce_cap: true,
            cap_exponent: DEFAULT_CAP_EXPONENT,
            stream: 0,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn y0(mut self, y0: usize) -> Self {
        self.y0 = y0;
        self
    }

    pub fn cap(mut self, enforce: bool) -> Self {
        self.enforce_cap = enforce;
        self
    }

    pub fn cap_exponent(mut self, exponent: f64) -> Self {
        self.cap_exponent = exponent;
        self
    }

    pub fn stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        check_probability(self.p)?;
        if self.y0 == 0 {
            return Err(GeneratorError::InitialSize);
        }
        if !(self.cap_exponent > 0.0 && self.cap_exponent < 0.5) {
            return Err(GeneratorError::CapExponent(self.cap_exponent));
        }
        self.size_dist.validate()?;
        Ok(())
    }

    /// Upper clamp for Y_t at step `t` (1-based).
    pub fn size_cap(&self, t: u64) -> usize {
        let root = ((t as f64).powf(self.cap_exponent) + 1e-9).floor() as usize;
        root.max(2)
    }
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(GeneratorError::Probability(p))
    }
}

pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Step-by-step driver of one evolution run.
#[derive(Debug, Clone)]
pub struct Evolution {
    config: GeneratorConfig,
    sampler: SizeSampler,
    rng: ChaCha8Rng,
    hypergraph: Hypergraph,
    t: u64,
    draws: Vec<VertexId>,
}

impl Evolution {
    pub fn new(config: GeneratorConfig) -> Result<Self, GeneratorError> {
        config.validate()?;
        Ok(Evolution {
            sampler: config.size_dist.sampler(),
            rng: stream_rng(config.seed, config.stream),
            hypergraph: Hypergraph::new_initial(config.y0)?,
            t: 0,
            draws: Vec::new(),
            config,
        })
    }

    pub fn time(&self) -> u64 {
        self.t
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hypergraph
    }

    /// Advances one time step and returns the cardinality of the new hyperedge.
    pub fn step(&mut self) -> usize {
        self.t += 1;
        let vertex_arrival = self.rng.random::<f64>() < self.config.p;
        let mut size = self.sampler.sample(&mut self.rng);
        if self.config.enforce_cap {
            size = size.clamp(2, self.config.size_cap(self.t));
        }

        let picks = if vertex_arrival { size - 1 } else { size };
        self.draws.clear();
        for _ in 0..picks {
            let v = self.hypergraph.draw_token(&mut self.rng);
            self.draws.push(v);
        }
        if vertex_arrival {
            let fresh = self.hypergraph.allocate_vertex();
            self.draws.push(fresh);
        }
        self.draws.sort_unstable();
        self.hypergraph.push_edge_unchecked(&self.draws);
        size
    }

    pub fn run(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }
}

/// Runs `config.steps` steps from the single-vertex initial hypergraph.
pub fn evolve(config: &GeneratorConfig) -> Result<Hypergraph, GeneratorError> {
    let mut evo = Evolution::new(config.clone())?;
    evo.run(config.steps);
    Ok(evo.into_hypergraph())
}

/// S_t after every step, starting with S_0 = y0. Length is `steps + 1`.
pub fn sum_sizes_trace(config: &GeneratorConfig) -> Result<Vec<u64>, GeneratorError> {
    let mut evo = Evolution::new(config.clone())?;
    let mut trace = Vec::with_capacity(config.steps as usize + 1);
    trace.push(evo.hypergraph().total_degree());
    for _ in 0..config.steps {
        evo.step();
        trace.push(evo.hypergraph().total_degree());
    }
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineConfig {
    pub p: f64,
    pub edges_per_step: usize,
    pub steps: u64,
    pub seed: u64,
    pub stream: u64,
}

impl BaselineConfig {
    pub fn new(p: f64, edges_per_step: usize, steps: u64, seed: u64) -> Self {
        BaselineConfig {
            p,
            edges_per_step,
            steps,
            seed,
            stream: 0,
        }
    }

    pub fn stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        check_probability(self.p)?;
        if self.edges_per_step == 0 {
            return Err(GeneratorError::EdgesPerStep);
        }
        Ok(())
    }
}

/// Preferential-attachment multigraph: each step either a new vertex joins
/// with `edges_per_step` edges to preferential endpoints (probability p), or
/// `edges_per_step` edges join two preferential endpoints.
///
/// Starts from one isolated vertex; while no edge exists the preferential
/// choice falls back to that vertex.
pub fn evolve_graph_baseline(config: &BaselineConfig) -> Result<ObservedGraph, GeneratorError> {
    config.validate()?;
    let mut rng = stream_rng(config.seed, config.stream);
    let m = config.edges_per_step;
    let mut tokens: Vec<VertexId> = Vec::with_capacity(2 * m * config.steps as usize);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(m * config.steps as usize);
    let mut num_vertices: usize = 1;
    let mut pending = Vec::with_capacity(2 * m);

    let draw = |tokens: &[VertexId], rng: &mut ChaCha8Rng| -> VertexId {
        if tokens.is_empty() {
            0
        } else {
            tokens[rng.random_range(0..tokens.len() as u64) as usize]
        }
    };

    for _ in 0..config.steps {
        let vertex_arrival = rng.random::<f64>() < config.p;
        pending.clear();
        if vertex_arrival {
            let fresh = num_vertices as VertexId;
            num_vertices += 1;
            for _ in 0..m {
                pending.push((fresh, draw(&tokens, &mut rng)));
            }
        } else {
            for _ in 0..m {
                let a = draw(&tokens, &mut rng);
                let b = draw(&tokens, &mut rng);
                pending.push((a, b));
            }
        }
        for &(a, b) in &pending {
            tokens.push(a);
            tokens.push(b);
            edges.push((a.min(b), a.max(b)));
        }
    }
    Ok(ObservedGraph::new(num_vertices, edges, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: f64, steps: u64, d: usize) -> GeneratorConfig {
        GeneratorConfig::new(p, steps, EdgeSizeDistribution::Constant(d))
    }

    #[test]
    fn zero_steps_is_initial() {
        let h = evolve(&cfg(0.5, 0, 3).y0(4)).unwrap();
        assert_eq!(h, Hypergraph::new_initial(4).unwrap());
        assert_eq!(sum_sizes_trace(&cfg(0.5, 0, 3).y0(4)).unwrap(), vec![4]);
    }

    #[test]
    fn p_one_pairs_build_a_tree_with_loops() {
        let t = 500;
        let h = evolve(&cfg(1.0, t, 2).y0(3).seed(11)).unwrap();
        assert_eq!(h.num_vertices() as u64, t + 1);
        assert_eq!(h.num_edges() as u64, t + 1);
        assert_eq!(h.total_degree(), 3 + 2 * t);
        for (i, e) in h.edges().enumerate().skip(1) {
            assert_eq!(e.len(), 2);
            // the arriving vertex is the largest id in its edge
            assert_eq!(e[1] as usize, i);
        }
    }

    #[test]
    fn constant_sizes_give_uniform_hypergraph_and_exact_trace() {
        let c = cfg(0.3, 2000, 3).y0(5).seed(2);
        let h = evolve(&c).unwrap();
        // with the cap on, sizes below t^(1/3) are clamped until t = 27
        assert!(h.edges().skip(27).all(|e| e.len() == 3));
        assert!(h.edges().skip(1).take(26).all(|e| e.len() == 2));
        let uniform = evolve(&c.clone().cap(false)).unwrap();
        assert!(uniform.edges().skip(1).all(|e| e.len() == 3));
        // cap clamps sizes to 2 until t reaches 27
        let trace = sum_sizes_trace(&c).unwrap();
        assert_eq!(trace.len(), 2001);
        for (t, &s) in trace.iter().enumerate() {
            let t = t as u64;
            let expected = if t <= 26 { 5 + 2 * t } else { 5 + 3 * t - 26 };
            assert_eq!(s, expected);
        }
        let uncapped = sum_sizes_trace(&c.clone().cap(false)).unwrap();
        for (t, &s) in uncapped.iter().enumerate() {
            assert_eq!(s, 5 + 3 * t as u64);
        }
    }

    #[test]
    fn size_cap_schedule() {
        let c = cfg(1.0, 0, 3);
        assert_eq!(c.size_cap(1), 2);
        assert_eq!(c.size_cap(7), 2);
        assert_eq!(c.size_cap(8), 2);
        assert_eq!(c.size_cap(26), 2);
        assert_eq!(c.size_cap(27), 3);
        assert_eq!(c.size_cap(63), 3);
        assert_eq!(c.size_cap(64), 4);
        assert_eq!(c.size_cap(1_000_000), 100);
    }

    #[test]
    fn fresh_vertex_has_degree_one_on_arrival() {
        let mut evo = Evolution::new(cfg(1.0, 0, 3).cap(false).seed(5)).unwrap();
        for t in 1..=200u32 {
            evo.step();
            assert_eq!(evo.hypergraph().degree(t), 1);
        }
    }

    #[test]
    fn deterministic_per_seed_and_stream() {
        let c = GeneratorConfig::new(0.5, 3000, EdgeSizeDistribution::uniform(2, 5).unwrap()).seed(42);
        assert_eq!(evolve(&c).unwrap(), evolve(&c).unwrap());
        assert_ne!(evolve(&c).unwrap(), evolve(&c.clone().stream(1)).unwrap());
        assert_ne!(evolve(&c).unwrap(), evolve(&c.clone().seed(43)).unwrap());
    }

    #[test]
    fn config_validation() {
        assert_eq!(evolve(&cfg(0.0, 1, 3)).unwrap_err(), GeneratorError::Probability(0.0));
        assert_eq!(evolve(&cfg(1.5, 1, 3)).unwrap_err(), GeneratorError::Probability(1.5));
        assert!(evolve(&cfg(f64::NAN, 1, 3)).is_err());
        assert_eq!(evolve(&cfg(0.5, 1, 3).y0(0)).unwrap_err(), GeneratorError::InitialSize);
        assert!(matches!(
            evolve(&cfg(0.5, 1, 1)).unwrap_err(),
            GeneratorError::Size(SizeDistError::TooSmall(1))
        ));
        assert!(matches!(
            evolve(&cfg(0.5, 1, 3).cap_exponent(0.5)).unwrap_err(),
            GeneratorError::CapExponent(_)
        ));
    }

    #[test]
    fn baseline_bookkeeping() {
        let g = evolve_graph_baseline(&BaselineConfig::new(0.5, 1, 0, 1)).unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert!(g.edges().is_empty());

        let g = evolve_graph_baseline(&BaselineConfig::new(1.0, 3, 400, 1)).unwrap();
        assert_eq!(g.num_vertices(), 401);
        assert_eq!(g.edges().len(), 1200);
        assert_eq!(g.degrees().iter().sum::<u64>(), 2400);

        let c = BaselineConfig::new(0.4, 2, 1000, 9);
        assert_eq!(evolve_graph_baseline(&c).unwrap(), evolve_graph_baseline(&c).unwrap());
        assert_eq!(
            evolve_graph_baseline(&BaselineConfig::new(0.4, 0, 10, 9)).unwrap_err(),
            GeneratorError::EdgesPerStep
        );
    }
}
