use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{diameter, distances_from, read_edge_list_file, WeightedGraph};

/// Size, diameter and weighting of a dataset.
///
/// `diameter` is `None` when the graph is empty or disconnected.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DatasetStats {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: Option<f64>,
    pub unit_weight: bool,
}

pub fn dataset_stats(path: impl AsRef<Path>, weighted: bool) -> Result<DatasetStats> {
    let list = read_edge_list_file(path, weighted)?;
    Ok(graph_stats(&list.graph))
}

pub fn graph_stats(graph: &WeightedGraph) -> DatasetStats {
    DatasetStats {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        diameter: diameter(graph).ok(),
        unit_weight: graph.is_unit_weight(),
    }
}

/// Most sources [`default_eps_grid`] measures distances from.
pub const GRID_SOURCES: usize = 256;

/// `count` quantiles of the pairwise-distance distribution, deduplicated
/// and ascending. Distances come from up to [`GRID_SOURCES`] evenly spaced
/// sources, so the grid is deterministic.
///
/// ```
/// use netwitness::graph::WeightedGraph;
/// use netwitness::harness::default_eps_grid;
///
/// let path = WeightedGraph::unweighted(9, (0..8).map(|i| (i, i + 1))).unwrap();
/// assert_eq!(default_eps_grid(&path, 3).unwrap(), vec![2.0, 3.0, 5.0]);
/// ```
pub fn default_eps_grid(graph: &WeightedGraph, count: usize) -> Result<Vec<f64>> {
    let n = graph.vertex_count();
    let sources = n.min(GRID_SOURCES);
    let rows: Vec<Vec<f64>> = (0..sources)
        .into_par_iter()
        .map(|i| distances_from(graph, i * n / sources))
        .collect::<Result<_>>()?;
    let mut all: Vec<f64> = rows
        .into_iter()
        .flatten()
        .filter(|d| *d > 0.0 && d.is_finite())
        .collect();
    if all.is_empty() || count == 0 {
        return Ok(Vec::new());
    }
    all.sort_by(f64::total_cmp);
    let mut grid: Vec<f64> = (1..=count)
        .map(|k| {
            let rank = (k * all.len()).div_ceil(count + 1);
            all[rank.saturating_sub(1)]
        })
        .collect();
    grid.dedup();
    Ok(grid)
}
