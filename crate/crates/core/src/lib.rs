//! Landmark selection with ε-nets on weighted graphs, lazy witness and
//! Vietoris-Rips filtrations over the landmarks, Z/2 persistent homology in
//! dimensions 0 and 1, and bottleneck comparison of the resulting diagrams.
//!
//! ```
//! use netwitness::epsnet::{iterative_eps_net, certify};
//! use netwitness::graph::WeightedGraph;
//!
//! let cycle = WeightedGraph::unweighted(12, (0..12).map(|i| (i, (i + 1) % 12))).unwrap();
//! let net = iterative_eps_net(&cycle, 2.0, 42).unwrap();
//! let cert = certify(&cycle, net.as_slice(), 2.0).unwrap();
//! assert!(cert.is_net() && cert.hausdorff <= 2.0);
//! ```

pub mod complex;
pub mod epsnet;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod metrics;
pub mod persistence;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/eps-nets.md")]
    mod eps_nets {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/persistence.md")]
    mod persistence {}
    #[doc = include_str!("../../../book/src/comparing.md")]
    mod comparing {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
}
