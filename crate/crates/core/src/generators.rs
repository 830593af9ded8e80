//! Seeded random graphs for tests, benchmarks and examples.

use std::collections::HashSet;

use rand::Rng;

use crate::epsnet::seeded_rng;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Weights {
    Unit,
    /// Independent uniform draws from `[low, high)`.
    Uniform { low: f64, high: f64 },
}

/// Connected graph on `vertices` vertices with exactly `edges` edges: a
/// random recursive tree plus uniformly chosen extra edges.
///
/// ```
/// use netwitness::generators::{random_connected_graph, Weights};
///
/// let g = random_connected_graph(50, 80, Weights::Unit, 7).unwrap();
/// assert_eq!((g.vertex_count(), g.edge_count()), (50, 80));
/// assert!(netwitness::graph::diameter(&g).is_ok());
/// ```
pub fn random_connected_graph(
    vertices: usize,
    edges: usize,
    weights: Weights,
    seed: u64,
) -> Result<WeightedGraph> {
    let max_edges = vertices * vertices.saturating_sub(1) / 2;
    if vertices == 0 || edges + 1 < vertices || edges > max_edges {
        return Err(Error::argument(format!(
            "cannot build a connected graph with {vertices} vertices and {edges} edges"
        )));
    }
    if let Weights::Uniform { low, high } = weights {
        if !(low > 0.0 && high > low && high.is_finite()) {
            return Err(Error::argument(format!("invalid weight range [{low}, {high})")));
        }
    }
    let mut rng = seeded_rng(seed);
    let mut pairs = Vec::with_capacity(edges);
    let mut seen = HashSet::with_capacity(edges);
    for v in 1..vertices {
        let u = rng.random_range(0..v);
        pairs.push((u, v));
        seen.insert((u, v));
    }
    while pairs.len() < edges {
        let a = rng.random_range(0..vertices);
        let b = rng.random_range(0..vertices);
        let key = (a.min(b), a.max(b));
        if a != b && seen.insert(key) {
            pairs.push(key);
        }
    }
    let weighted: Vec<(usize, usize, f64)> = pairs
        .into_iter()
        .map(|(u, v)| {
            let w = match weights {
                Weights::Unit => 1.0,
                Weights::Uniform { low, high } => rng.random_range(low..high),
            };
            (u, v, w)
        })
        .collect();
    WeightedGraph::from_edges(vertices, weighted)
}
