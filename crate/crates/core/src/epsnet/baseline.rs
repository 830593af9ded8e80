use rand::seq::index::sample;
use rand::Rng;

use super::{seeded_rng, Algorithm, LandmarkSet};
use crate::error::{Error, Result};
use crate::graph::{distances_from, VertexId, WeightedGraph};

fn check_count(graph: &WeightedGraph, k: usize) -> Result<()> {
    if k == 0 || k > graph.vertex_count() {
        return Err(Error::argument(format!(
            "landmark count must lie in 1..={}, got {k}",
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// Farthest-point sampling from a uniformly random start.
pub fn maxmin_landmarks(graph: &WeightedGraph, k: usize, seed: u64) -> Result<LandmarkSet> {
    check_count(graph, k)?;
    let start = seeded_rng(seed).random_range(0..graph.vertex_count());
    let mut set = maxmin_landmarks_from(graph, k, start)?;
    set.seed = seed;
    Ok(set)
}

/// Farthest-point sampling from `start`: each next landmark maximises the
/// distance to the chosen set, ties to the smallest id.
pub fn maxmin_landmarks_from(
    graph: &WeightedGraph,
    k: usize,
    start: VertexId,
) -> Result<LandmarkSet> {
    check_count(graph, k)?;
    graph.check_vertex(start)?;
    let mut nearest = distances_from(graph, start)?;
    let mut landmarks = vec![start];
    while landmarks.len() < k {
        let mut best = None;
        for (v, &d) in nearest.iter().enumerate() {
            if d > 0.0 && best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        let (next, _) = best.expect("fewer landmarks than vertices");
        landmarks.push(next);
        for (slot, d) in nearest.iter_mut().zip(distances_from(graph, next)?) {
            *slot = slot.min(d);
        }
    }
    Ok(LandmarkSet {
        algorithm: Algorithm::Maxmin,
        eps: None,
        seed: 0,
        landmarks,
    })
}

/// `k` distinct vertices drawn uniformly.
pub fn random_landmarks(graph: &WeightedGraph, k: usize, seed: u64) -> Result<LandmarkSet> {
    check_count(graph, k)?;
    let mut rng = seeded_rng(seed);
    Ok(LandmarkSet {
        algorithm: Algorithm::Random,
        eps: None,
        seed,
        landmarks: sample(&mut rng, graph.vertex_count(), k).into_vec(),
    })
}
