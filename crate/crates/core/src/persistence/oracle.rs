//! Independent reference computations used to check [`super::compute_persistence`].

use std::collections::HashMap;

use super::{PersistenceDiagram, PersistencePoint};
use crate::complex::{DistanceMatrix, Filtration};
use crate::error::{Error, Result};

/// Largest complex [`betti_rank_oracle`] accepts.
pub const BETTI_ORACLE_MAX_SIMPLICES: usize = 600;

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Dimension-0 Rips diagram from Kruskal's algorithm: one `(0, 0, w)` point
/// per minimum-spanning-tree edge of weight `w > 0`, plus `(0, 0, ∞)`.
pub fn dim0_mst_oracle(metric: &DistanceMatrix) -> PersistenceDiagram {
    let n = metric.size();
    let mut edges: Vec<(f64, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (metric.get(i, j), i, j))
        .collect();
    edges.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut sets = DisjointSet::new(n);
    let mut points = Vec::new();
    for (w, i, j) in edges {
        if sets.union(i, j) {
            points.push(PersistencePoint::new(0, 0.0, w));
        }
    }
    if n > 0 {
        points.push(PersistencePoint::new(0, 0.0, f64::INFINITY));
    }
    PersistenceDiagram::new(points, metric.max())
}

/// Betti number `β_dim` of the complex at `alpha`, from ranks of the Z/2
/// boundary matrices by Gaussian elimination.
pub fn betti_rank_oracle(filtration: &Filtration, alpha: f64, dim: usize) -> Result<usize> {
    let complex = filtration.complex_at(alpha)?;
    if complex.len() > BETTI_ORACLE_MAX_SIMPLICES {
        return Err(Error::argument(format!(
            "rank oracle handles at most {BETTI_ORACLE_MAX_SIMPLICES} simplices, got {}",
            complex.len()
        )));
    }
    let by_dim = |k: usize| -> Vec<&[usize]> {
        complex
            .iter()
            .filter(|s| s.dim() == k)
            .map(|s| s.vertices())
            .collect()
    };
    let chains = by_dim(dim);
    let rank_out = if dim == 0 {
        0
    } else {
        boundary_rank(&by_dim(dim - 1), &chains)
    };
    let rank_in = boundary_rank(&chains, &by_dim(dim + 1));
    Ok(chains.len() - rank_out - rank_in)
}

/// Rank over Z/2 of the boundary map from `cells` onto `faces`.
fn boundary_rank(faces: &[&[usize]], cells: &[&[usize]]) -> usize {
    if faces.is_empty() || cells.is_empty() {
        return 0;
    }
    let row_of: HashMap<&[usize], usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let words = faces.len().div_ceil(64);
    let mut rows: Vec<Vec<u64>> = cells
        .iter()
        .map(|cell| {
            let mut bits = vec![0u64; words];
            for skip in 0..cell.len() {
                let face: Vec<usize> = cell
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let r = row_of[face.as_slice()];
                bits[r / 64] ^= 1 << (r % 64);
            }
            bits
        })
        .collect();

    let mut rank = 0;
    for bit in 0..faces.len() {
        let (word, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][word] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[word] & mask != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}
