use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{distances_from, VertexId, WeightedGraph};

/// Symmetric matrix of pairwise distances with a zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    size: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    /// Validates a row-major `size × size` matrix.
    pub fn new(size: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::argument(format!(
                "expected {} entries for a {size}x{size} matrix, got {}",
                size * size,
                entries.len()
            )));
        }
        for i in 0..size {
            if entries[i * size + i] != 0.0 {
                return Err(Error::argument(format!("diagonal entry {i} is not zero")));
            }
            for j in i + 1..size {
                let d = entries[i * size + j];
                if !(d >= 0.0) || d != entries[j * size + i] {
                    return Err(Error::argument(format!(
                        "entries ({i}, {j}) are negative or asymmetric"
                    )));
                }
            }
        }
        Ok(Self { size, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::argument("distance matrix must be square"));
        }
        Self::new(size, rows.concat())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn max(&self) -> f64 {
        self.entries.iter().copied().fold(0.0, f64::max)
    }
}

/// Geodesic distances between landmarks, one single-source search each.
///
/// Searches from opposite ends may round a distance differently; each pair
/// keeps the smaller value so the matrix is exactly symmetric.
pub fn landmark_metric(graph: &WeightedGraph, landmarks: &[VertexId]) -> Result<DistanceMatrix> {
    if landmarks.is_empty() {
        return Err(Error::argument("landmark set is empty"));
    }
    let rows = landmarks
        .par_iter()
        .map(|&l| distances_from(graph, l))
        .collect::<Result<Vec<_>>>()?;
    let size = landmarks.len();
    let mut entries = Vec::with_capacity(size * size);
    for (i, row) in rows.iter().enumerate() {
        for (j, &l) in landmarks.iter().enumerate() {
            let d = row[l].min(rows[j][landmarks[i]]);
            if d.is_infinite() {
                return Err(Error::Disconnected {
                    first: landmarks[i],
                    second: landmarks[j],
                });
            }
            entries.push(d);
        }
    }
    DistanceMatrix::new(size, entries)
}
