//! Monte-Carlo checks of the generator's bookkeeping and concentration.

use hyperpa::analysis::project;
use hyperpa::generator::{evolve, sum_sizes_trace, Evolution, GeneratorConfig};
use hyperpa::io::{read_hypergraph, write_hypergraph};
use hyperpa::EdgeSizeDistribution;
use rayon::prelude::*;

#[test]
fn vertex_count_is_binomially_concentrated() {
    let (p, steps) = (0.3, 20_000u64);
    let runs = 100;
    let within = (0..runs)
        .into_par_iter()
        .filter(|&i| {
            let config = GeneratorConfig::new(p, steps, EdgeSizeDistribution::Constant(3))
                .seed(5)
                .stream(i);
            let h = evolve(&config).unwrap();
            let mean = 1.0 + p * steps as f64;
            let band = 4.0 * (p * (1.0 - p) * steps as f64).sqrt();
            (h.num_vertices() as f64 - mean).abs() <= band
        })
        .count();
    assert!(within >= 99, "{within}/{runs}");
}

#[test]
fn total_degree_equals_initial_plus_drawn_sizes() {
    let config = GeneratorConfig::new(0.6, 5000, "zipf:2.5:2:40".parse().unwrap())
        .seed(3)
        .y0(4);
    let mut evo = Evolution::new(config).unwrap();
    let mut drawn = 0u64;
    for _ in 0..5000 {
        drawn += evo.step() as u64;
    }
    assert_eq!(evo.hypergraph().total_degree(), 4 + drawn);
    let trace = sum_sizes_trace(
        &GeneratorConfig::new(0.6, 5000, "zipf:2.5:2:40".parse().unwrap())
            .seed(3)
            .y0(4),
    )
    .unwrap();
    assert_eq!(*trace.last().unwrap(), 4 + drawn);
    assert!(trace.windows(2).all(|w| w[1] - w[0] >= 2));
}

#[test]
fn capped_sizes_respect_the_schedule() {
    let config = GeneratorConfig::new(0.5, 3000, EdgeSizeDistribution::uniform(2, 30).unwrap()).seed(8);
    let h = evolve(&config).unwrap();
    for (t, e) in h.edges().enumerate().skip(1) {
        assert!(
            e.len() >= 2 && e.len() <= config.size_cap(t as u64),
            "t={t} size={}",
            e.len()
        );
    }
}

#[test]
fn regeneration_is_byte_identical() {
    let config = GeneratorConfig::new(0.5, 10_000, EdgeSizeDistribution::uniform(2, 4).unwrap()).seed(99);
    let render = || {
        let mut buf = Vec::new();
        write_hypergraph(&evolve(&config).unwrap(), &mut buf).unwrap();
        buf
    };
    let first = render();
    assert_eq!(first, render());
    assert_eq!(read_hypergraph(first.as_slice()).unwrap(), evolve(&config).unwrap());
}

#[test]
fn observed_graph_average_degree_is_reported() {
    // With p = 1 each step adds d(d-1) projected degree mass and one vertex,
    // so the mean projected degree approaches d(d-1).
    let d = 3;
    let config = GeneratorConfig::new(1.0, 50_000, EdgeSizeDistribution::Constant(d))
        .seed(1)
        .y0(3);
    let g = project(&evolve(&config).unwrap(), false);
    let avg = g.average_degree();
    assert!((avg - (d * (d - 1)) as f64).abs() < 0.01, "{avg}");
}
