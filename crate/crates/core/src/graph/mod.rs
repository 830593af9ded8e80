//! Weighted simple graphs and the geodesic metric they carry.
//!
//! A [`WeightedGraph`] is immutable once built. Every traversal in
//! [`search`] allocates its own scratch space, so a graph can be shared
//! freely across threads.

mod io;
pub mod search;
mod tree;

pub use io::{load_edge_list, read_edge_list_file, EdgeList, IdMap};
pub use search::{
    diameter, distances_from, eps_ball, multi_source_distances, nearest_landmark_distances, sssp,
    DistanceMap,
};
pub use tree::{shortest_path_tree, ShortestPathTree};

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Dense vertex index in `0..vertex_count`.
pub type VertexId = usize;

/// Undirected simple graph with strictly positive edge weights.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    adjacency: Vec<Vec<(VertexId, f64)>>,
    edge_count: usize,
    unit_weight: bool,
}

impl WeightedGraph {
    /// Builds a graph on `vertex_count` vertices.
    ///
    /// Edges may be listed in either direction and more than once; repeated
    /// undirected edges collapse to the smallest weight. Self-loops,
    /// non-positive or non-finite weights and out-of-range ids are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, f64)>,
    {
        let mut collapsed: BTreeMap<(VertexId, VertexId), f64> = BTreeMap::new();
        for (u, v, w) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::argument(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("self-loop on vertex {u}")));
            }
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::argument(format!(
                    "edge ({u}, {v}) has non-positive weight {w}"
                )));
            }
            let key = (u.min(v), u.max(v));
            collapsed
                .entry(key)
                .and_modify(|old| *old = old.min(w))
                .or_insert(w);
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut unit_weight = true;
        for (&(u, v), &w) in &collapsed {
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
            unit_weight &= w == 1.0;
        }
        for list in &mut adjacency {
            list.sort_by_key(|&(v, _)| v);
        }
        Ok(Self {
            adjacency,
            edge_count: collapsed.len(),
            unit_weight,
        })
    }

    /// Builds a unit-weight graph.
    pub fn unweighted<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::from_edges(vertex_count, edges.into_iter().map(|(u, v)| (u, v, 1.0)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// True iff every edge has weight exactly 1. An edgeless graph counts as unit-weight.
    pub fn is_unit_weight(&self) -> bool {
        self.unit_weight
    }

    /// Neighbours of `v` with edge weights, sorted by neighbour id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.adjacency[v]
    }

    /// Weight of edge `{u, v}` if present.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<f64> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(n, _)| n)
            .ok()
            .map(|i| list[i].1)
    }

    /// Undirected edges `(u, v, w)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, f64)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::argument(format!(
                "vertex {v} is out of range for a graph with {} vertices",
                self.vertex_count()
            )))
        }
    }
}
