//! Persistent homology over Z/2 in dimensions 0 and 1.

mod diagram;
pub mod oracle;
mod reduction;

pub use diagram::{PersistenceDiagram, PersistencePoint};
pub use oracle::{betti_rank_oracle, dim0_mst_oracle};
pub use reduction::{compute_persistence, ReductionState};
