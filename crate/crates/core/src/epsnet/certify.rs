use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::search::Search;
use crate::graph::{multi_source_distances, VertexId, WeightedGraph};

/// Two landmarks that sit within ε of each other.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparseViolation {
    pub first: VertexId,
    pub second: VertexId,
    pub distance: f64,
}

/// Evidence that a landmark set is (or is not) an ε-net.
///
/// `hausdorff` equals `coverage_radius`: every landmark is a vertex, so the
/// landmark-to-vertex direction of the Hausdorff distance is zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetCertificate {
    pub eps: f64,
    pub sparse_ok: bool,
    pub sparse_witness: Option<SparseViolation>,
    pub sample_ok: bool,
    pub coverage_radius: f64,
    pub hausdorff: f64,
}

impl NetCertificate {
    pub fn is_net(&self) -> bool {
        self.sparse_ok && self.sample_ok
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Checks ε-sparsity and ε-sample coverage of `landmarks` on the graph metric.
///
/// The sparsity witness is the violating pair that comes first in selection
/// order. Coverage is measured with one multi-source search; vertices no
/// landmark reaches make the radius infinite.
pub fn certify(graph: &WeightedGraph, landmarks: &[VertexId], eps: f64) -> Result<NetCertificate> {
    if landmarks.is_empty() {
        return Err(Error::argument("landmark set is empty"));
    }
    if eps.is_nan() || eps < 0.0 {
        return Err(Error::argument(format!("eps must be non-negative, got {eps}")));
    }
    let mut position = HashMap::with_capacity(landmarks.len());
    for (i, &l) in landmarks.iter().enumerate() {
        graph.check_vertex(l)?;
        if position.insert(l, i).is_some() {
            return Err(Error::argument(format!("landmark {l} appears twice")));
        }
    }

    let mut search = Search::new(graph.vertex_count());
    let mut sparse_witness = None;
    for (i, &l) in landmarks.iter().enumerate() {
        search.run(graph, &[l], eps);
        let closest = search
            .settled_order()
            .iter()
            .filter_map(|v| position.get(v).map(|&j| (j, *v)))
            .filter(|&(j, _)| j > i)
            .min();
        if let Some((_, other)) = closest {
            sparse_witness = Some(SparseViolation {
                first: l,
                second: other,
                distance: search.dist(other),
            });
            break;
        }
    }

    let coverage_radius = multi_source_distances(graph, landmarks)?
        .into_iter()
        .fold(0.0, f64::max);
    Ok(NetCertificate {
        eps,
        sparse_ok: sparse_witness.is_none(),
        sparse_witness,
        sample_ok: coverage_radius <= eps,
        coverage_radius,
        hausdorff: coverage_radius,
    })
}
