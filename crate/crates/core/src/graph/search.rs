//! Single- and multi-source geodesic searches, optionally truncated at a radius.
//!
//! Weighted graphs are searched priority-first. Unit-weight graphs use a
//! FIFO breadth-first sweep, which yields identical distances.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use rayon::prelude::*;

use super::{VertexId, WeightedGraph};
use crate::error::{Error, Result};

/// Geodesic distances from one source to the vertices a search reached.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMap {
    source: VertexId,
    /// Sorted by vertex id.
    entries: Vec<(VertexId, f64)>,
}

impl DistanceMap {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn get(&self, v: VertexId) -> Option<f64> {
        self.entries
            .binary_search_by_key(&v, |&(u, _)| u)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.get(v).is_some()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(vertex, distance)` pairs in ascending vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    pub fn max_distance(&self) -> f64 {
        self.entries.iter().map(|&(_, d)| d).fold(0.0, f64::max)
    }
}

/// All vertices within `eps` of `u`, with exact distances.
pub fn eps_ball(graph: &WeightedGraph, u: VertexId, eps: f64) -> Result<DistanceMap> {
    graph.check_vertex(u)?;
    if eps.is_nan() || eps < 0.0 {
        return Err(Error::argument(format!("radius must be non-negative, got {eps}")));
    }
    let mut search = Search::new(graph.vertex_count());
    search.run(graph, &[u], eps);
    Ok(search.distance_map(u))
}

/// Distances from `u` to every vertex reachable from it.
pub fn sssp(graph: &WeightedGraph, u: VertexId) -> Result<DistanceMap> {
    graph.check_vertex(u)?;
    let mut search = Search::new(graph.vertex_count());
    search.run(graph, &[u], f64::INFINITY);
    Ok(search.distance_map(u))
}

/// Dense distance vector from `u`; unreachable vertices hold `f64::INFINITY`.
pub fn distances_from(graph: &WeightedGraph, u: VertexId) -> Result<Vec<f64>> {
    graph.check_vertex(u)?;
    let mut search = Search::new(graph.vertex_count());
    search.run(graph, &[u], f64::INFINITY);
    Ok(search.dense())
}

/// Distance from every vertex to the nearest of `sources`.
pub fn multi_source_distances(graph: &WeightedGraph, sources: &[VertexId]) -> Result<Vec<f64>> {
    for &s in sources {
        graph.check_vertex(s)?;
    }
    let mut search = Search::new(graph.vertex_count());
    search.run(graph, sources, f64::INFINITY);
    Ok(search.dense())
}

/// Largest geodesic distance between two vertices.
///
/// Fails on empty or disconnected graphs; the error names vertex 0 and the
/// smallest vertex it cannot reach.
pub fn diameter(graph: &WeightedGraph) -> Result<f64> {
    let from_zero = connected_distances(graph)?;
    let first = from_zero.iter().copied().fold(0.0, f64::max);
    let rest = (1..graph.vertex_count())
        .into_par_iter()
        .map_init(
            || Search::new(graph.vertex_count()),
            |search, u| {
                search.run(graph, &[u], f64::INFINITY);
                search.max_settled()
            },
        )
        .reduce(|| 0.0, f64::max);
    Ok(first.max(rest))
}

/// Distances from vertex 0, or an error if the graph is empty or disconnected.
pub(crate) fn connected_distances(graph: &WeightedGraph) -> Result<Vec<f64>> {
    if graph.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let dist = distances_from(graph, 0)?;
    if let Some(second) = dist.iter().position(|d| d.is_infinite()) {
        return Err(Error::Disconnected { first: 0, second });
    }
    Ok(dist)
}

/// For each vertex `w`, the `nu`-th smallest distance from `w` to a landmark.
///
/// Landmarks see themselves at distance 0, so with `nu = 1` every landmark
/// maps to 0. Vertices that reach fewer than `nu` landmarks get infinity.
pub fn nearest_landmark_distances(
    graph: &WeightedGraph,
    landmarks: &[VertexId],
    nu: usize,
) -> Result<Vec<f64>> {
    if landmarks.is_empty() {
        return Err(Error::argument("landmark set is empty"));
    }
    if nu == 0 || nu > landmarks.len() {
        return Err(Error::argument(format!(
            "nu must lie in 1..={}, got {nu}",
            landmarks.len()
        )));
    }
    if nu == 1 {
        return multi_source_distances(graph, landmarks);
    }
    let per_landmark = landmarks
        .par_iter()
        .map(|&l| distances_from(graph, l))
        .collect::<Result<Vec<_>>>()?;
    let mut scratch = Vec::with_capacity(landmarks.len());
    Ok(graph
        .vertices()
        .map(|w| {
            scratch.clear();
            scratch.extend(per_landmark.iter().map(|d| d[w]));
            let (_, nth, _) = scratch.select_nth_unstable_by(nu - 1, f64::total_cmp);
            *nth
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Frontier {
    dist: f64,
    vertex: VertexId,
}

impl Eq for Frontier {}

impl Ord for Frontier {
    // Reversed so that `BinaryHeap` pops the closest vertex, smallest id first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reusable search state. Only the entries touched by the last run are reset.
pub(crate) struct Search {
    dist: Vec<f64>,
    settled: Vec<bool>,
    touched: Vec<VertexId>,
    order: Vec<VertexId>,
    heap: BinaryHeap<Frontier>,
    queue: VecDeque<VertexId>,
}

impl Search {
    pub(crate) fn new(vertex_count: usize) -> Self {
        Self {
            dist: vec![f64::INFINITY; vertex_count],
            settled: vec![false; vertex_count],
            touched: Vec::new(),
            order: Vec::new(),
            heap: BinaryHeap::new(),
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.dist[v] = f64::INFINITY;
            self.settled[v] = false;
        }
        self.touched.clear();
        self.order.clear();
        self.heap.clear();
        self.queue.clear();
    }

    /// Settles every vertex within `radius` of the nearest source. Vertices
    /// adjacent to a settled vertex but beyond `radius` keep a tentative
    /// distance and are reported by [`Search::frontier`].
    pub(crate) fn run(&mut self, graph: &WeightedGraph, sources: &[VertexId], radius: f64) {
        self.reset();
        for &s in sources {
            if self.dist[s] != 0.0 {
                self.dist[s] = 0.0;
                self.touched.push(s);
            }
        }
        if graph.is_unit_weight() {
            self.run_fifo(graph, sources, radius);
        } else {
            self.run_priority(graph, sources, radius);
        }
    }

    fn run_fifo(&mut self, graph: &WeightedGraph, sources: &[VertexId], radius: f64) {
        for &s in sources {
            if !self.settled[s] {
                self.settled[s] = true;
                self.order.push(s);
                self.queue.push_back(s);
            }
        }
        while let Some(v) = self.queue.pop_front() {
            let next = self.dist[v] + 1.0;
            for &(n, _) in graph.neighbors(v) {
                if self.dist[n].is_infinite() {
                    self.dist[n] = next;
                    self.touched.push(n);
                    if next <= radius {
                        self.settled[n] = true;
                        self.order.push(n);
                        self.queue.push_back(n);
                    }
                }
            }
        }
    }

    fn run_priority(&mut self, graph: &WeightedGraph, sources: &[VertexId], radius: f64) {
        for &s in sources {
            self.heap.push(Frontier { dist: 0.0, vertex: s });
        }
        while let Some(Frontier { dist, vertex }) = self.heap.pop() {
            if dist > radius {
                break;
            }
            if self.settled[vertex] || dist > self.dist[vertex] {
                continue;
            }
            self.settled[vertex] = true;
            self.order.push(vertex);
            for &(n, w) in graph.neighbors(vertex) {
                if self.settled[n] {
                    continue;
                }
                let candidate = dist + w;
                if candidate < self.dist[n] {
                    if self.dist[n].is_infinite() {
                        self.touched.push(n);
                    }
                    self.dist[n] = candidate;
                    self.heap.push(Frontier {
                        dist: candidate,
                        vertex: n,
                    });
                }
            }
        }
    }

    /// Settled vertices in the order they were settled.
    pub(crate) fn settled_order(&self) -> &[VertexId] {
        &self.order
    }

    /// Vertices reached from the settled region but lying beyond the radius.
    pub(crate) fn frontier(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.touched.iter().copied().filter(|&v| !self.settled[v])
    }

    pub(crate) fn dist(&self, v: VertexId) -> f64 {
        self.dist[v]
    }

    fn max_settled(&self) -> f64 {
        self.order.iter().map(|&v| self.dist[v]).fold(0.0, f64::max)
    }

    fn distance_map(&self, source: VertexId) -> DistanceMap {
        let mut entries: Vec<_> = self.order.iter().map(|&v| (v, self.dist[v])).collect();
        entries.sort_unstable_by_key(|&(v, _)| v);
        DistanceMap { source, entries }
    }

    fn dense(&self) -> Vec<f64> {
        let mut out = vec![f64::INFINITY; self.dist.len()];
        for &v in &self.order {
            out[v] = self.dist[v];
        }
        out
    }
}
