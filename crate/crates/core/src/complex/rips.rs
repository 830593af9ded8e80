use super::{check_params, flag_filtration, DistanceMatrix, Filtration};
use crate::error::Result;

/// Vietoris-Rips filtration of a finite metric, truncated at `alpha_max`.
pub fn rips_filtration(metric: &DistanceMatrix, alpha_max: f64, max_dim: usize) -> Result<Filtration> {
    check_params(alpha_max, max_dim)?;
    let n = metric.size();
    let births: Vec<f64> = (0..n).flat_map(|i| metric.row(i).iter().copied()).collect();
    Ok(flag_filtration(n, &births, alpha_max, max_dim))
}
