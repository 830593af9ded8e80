use rayon::prelude::*;

use super::{check_params, flag_filtration, Filtration};
use crate::error::{Error, Result};
use crate::graph::{distances_from, nearest_landmark_distances, VertexId, WeightedGraph};

/// Row-major `|L| × |L|` matrix of lazy witness edge births, with every
/// graph vertex acting as a potential witness. Entries are clamped at 0;
/// pairs no witness reaches are infinite.
pub fn lazy_witness_edge_births(
    graph: &WeightedGraph,
    landmarks: &[VertexId],
    nu: usize,
) -> Result<Vec<f64>> {
    if nu != 1 {
        return Err(Error::Unsupported(format!(
            "lazy witness complexes are built for nu = 1 only, got {nu}"
        )));
    }
    let slack = nearest_landmark_distances(graph, landmarks, nu)?;
    let to_landmark = landmarks
        .par_iter()
        .map(|&l| distances_from(graph, l))
        .collect::<Result<Vec<_>>>()?;

    let n = landmarks.len();
    let upper: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let da = &to_landmark[a];
            (a + 1..n)
                .map(|b| {
                    let best = da
                        .iter()
                        .zip(&to_landmark[b])
                        .zip(&slack)
                        .filter(|(_, s)| s.is_finite())
                        .map(|((&x, &y), &s)| x.max(y) - s)
                        .fold(f64::INFINITY, f64::min);
                    best.max(0.0)
                })
                .collect()
        })
        .collect();
    let mut births = vec![0.0; n * n];
    for (a, row) in upper.iter().enumerate() {
        for (offset, &value) in row.iter().enumerate() {
            let b = a + 1 + offset;
            births[a * n + b] = value;
            births[b * n + a] = value;
        }
    }
    Ok(births)
}

/// Lazy witness filtration (ν = 1) of `landmarks`, truncated at `alpha_max`.
pub fn lazy_witness_filtration(
    graph: &WeightedGraph,
    landmarks: &[VertexId],
    nu: usize,
    alpha_max: f64,
    max_dim: usize,
) -> Result<Filtration> {
    check_params(alpha_max, max_dim)?;
    let births = lazy_witness_edge_births(graph, landmarks, nu)?;
    Ok(flag_filtration(landmarks.len(), &births, alpha_max, max_dim))
}
