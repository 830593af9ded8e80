use std::collections::BTreeSet;

use rand::Rng;

use super::{check_eps, pick_uniform, seeded_rng, Algorithm, LandmarkSet};
use crate::error::{Error, Result};
use crate::graph::search::Search;
use crate::graph::{VertexId, WeightedGraph};

/// Iterative ε-net with a uniformly random first landmark.
pub fn iterative_eps_net(graph: &WeightedGraph, eps: f64, seed: u64) -> Result<LandmarkSet> {
    check_eps(eps)?;
    let mut rng = seeded_rng(seed);
    if graph.vertex_count() == 0 {
        return Ok(empty(eps, seed));
    }
    let start = rng.random_range(0..graph.vertex_count());
    run(graph, eps, start, seed, &mut rng)
}

/// Iterative ε-net starting from a fixed landmark; `seed` drives later picks.
pub fn iterative_eps_net_from(
    graph: &WeightedGraph,
    eps: f64,
    start: VertexId,
    seed: u64,
) -> Result<LandmarkSet> {
    check_eps(eps)?;
    graph.check_vertex(start)?;
    run(graph, eps, start, seed, &mut seeded_rng(seed))
}

fn empty(eps: f64, seed: u64) -> LandmarkSet {
    LandmarkSet {
        algorithm: Algorithm::Iterative,
        eps: Some(eps),
        seed,
        landmarks: Vec::new(),
    }
}

/// Grows the net outward. Each new landmark's search runs to radius 2ε over
/// the whole graph: uncovered vertices within ε are covered, those in
/// (ε, 2ε] join the ring pool, and uncovered vertices first reached beyond
/// 2ε join the enveloping pool. The next landmark is drawn from the
/// enveloping pool, else the ring pool, else any uncovered vertex (the last
/// case only arises on disconnected graphs).
fn run<R: Rng>(
    graph: &WeightedGraph,
    eps: f64,
    start: VertexId,
    seed: u64,
    rng: &mut R,
) -> Result<LandmarkSet> {
    let n = graph.vertex_count();
    let outer = 2.0 * eps;
    if !outer.is_finite() {
        return Err(Error::argument("eps is too large"));
    }
    let mut marked = vec![false; n];
    let mut remaining = n;
    let mut ring: BTreeSet<VertexId> = BTreeSet::new();
    let mut enveloping: BTreeSet<VertexId> = BTreeSet::new();
    let mut search = Search::new(n);
    let mut landmarks = Vec::new();
    let mut snapshot = Vec::new();
    let mut current = start;

    loop {
        landmarks.push(current);
        search.run(graph, &[current], outer);
        for &v in search.settled_order() {
            if marked[v] {
                continue;
            }
            if search.dist(v) <= eps {
                marked[v] = true;
                remaining -= 1;
                ring.remove(&v);
                enveloping.remove(&v);
            } else {
                ring.insert(v);
            }
        }
        enveloping.extend(search.frontier().filter(|&v| !marked[v]));

        if remaining == 0 {
            break;
        }
        snapshot.clear();
        if !enveloping.is_empty() {
            snapshot.extend(enveloping.iter().copied());
        } else if !ring.is_empty() {
            snapshot.extend(ring.iter().copied());
        } else {
            snapshot.extend(graph.vertices().filter(|&v| !marked[v]));
        }
        current = pick_uniform(rng, &snapshot);
    }

    Ok(LandmarkSet {
        algorithm: Algorithm::Iterative,
        eps: Some(eps),
        seed,
        landmarks,
    })
}
