//! Comparing persistence diagrams: partial diagrams, log scale, bottleneck distance.

mod bottleneck;
mod partial;

pub use bottleneck::bottleneck;
pub use partial::{filter_after, to_log_scale, PartialDiagram, Scale};

use crate::error::Result;
use crate::persistence::PersistenceDiagram;

/// `3 ln 3`, the log-scale bound between lazy witness and Rips partial
/// diagrams of an ε-net.
pub fn three_log_three() -> f64 {
    3.0 * 3f64.ln()
}

/// Bottleneck distance in log scale between the parts of two diagrams born
/// after `threshold`, in dimension `dim`.
pub fn log_bottleneck_after(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    dim: usize,
    threshold: f64,
) -> Result<f64> {
    let pa = to_log_scale(&filter_after(a, dim, threshold)?)?;
    let pb = to_log_scale(&filter_after(b, dim, threshold)?)?;
    bottleneck(&pa, &pb)
}
