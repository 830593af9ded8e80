//! Filtered simplicial complexes over a landmark set, up to dimension 2.
//!
//! Both complexes here are flag complexes: a triangle enters as soon as its
//! three edges are present. They differ only in when an edge is born.
//!
//! * Vietoris-Rips: edge `{a, b}` at `d(a, b)`.
//! * Lazy witness (ν = 1): edge `{a, b}` at
//!   `max(0, min_w max(d(w, a), d(w, b)) − d¹(w))`, where `w` ranges over all
//!   graph vertices and `d¹(w)` is the distance from `w` to its nearest landmark.

mod filtration;
mod metric;
mod rips;
mod witness;

pub use filtration::{Filtration, Simplex};
pub use metric::{landmark_metric, DistanceMatrix};
pub use rips::rips_filtration;
pub use witness::{lazy_witness_edge_births, lazy_witness_filtration};

use crate::error::{Error, Result};

pub(crate) fn check_params(alpha_max: f64, max_dim: usize) -> Result<()> {
    if !(alpha_max > 0.0) {
        return Err(Error::argument(format!("alpha_max must be positive, got {alpha_max}")));
    }
    if max_dim > 2 {
        return Err(Error::Unsupported(format!(
            "simplices above dimension 2 are not built (max_dim = {max_dim})"
        )));
    }
    Ok(())
}

/// Flag filtration on `n` vertices from a dense row-major matrix of edge
/// births. Edges born above `alpha_max` are left out.
pub(crate) fn flag_filtration(
    n: usize,
    births: &[f64],
    alpha_max: f64,
    max_dim: usize,
) -> Filtration {
    let mut simplices: Vec<Simplex> = (0..n).map(|v| Simplex::vertex(v, 0.0)).collect();
    if max_dim >= 1 {
        let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let b = births[i * n + j];
                if b <= alpha_max {
                    simplices.push(Simplex::edge(i, j, b));
                    neighbors[i].push(j);
                }
            }
        }
        if max_dim >= 2 {
            for i in 0..n {
                for (x, &j) in neighbors[i].iter().enumerate() {
                    let ij = births[i * n + j];
                    for &k in &neighbors[i][x + 1..] {
                        let jk = births[j * n + k];
                        if jk <= alpha_max {
                            let value = ij.max(births[i * n + k]).max(jk);
                            simplices.push(Simplex::triangle(i, j, k, value));
                        }
                    }
                }
            }
        }
    }
    Filtration::assemble(simplices, alpha_max)
}
