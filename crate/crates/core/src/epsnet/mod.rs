//! Landmark selection: three ε-net constructions, two baselines, and a
//! certifier that checks the net properties on the graph metric.
//!
//! An ε-net `L ⊆ V` is *ε-sparse* (distinct landmarks are more than ε apart)
//! and an *ε-sample* (every vertex lies within ε of some landmark).
//!
//! | constructor | guarantee |
//! |---|---|
//! | [`greedy_eps_net`] | ε-net, picks the vertex covering the most uncovered vertices |
//! | [`iterative_eps_net`] | ε-net, grows outward from a random start |
//! | [`spt_pruning_eps_net`] | ε-sparse and a 2ε-sample, sweeps a shortest-path tree |
//! | [`maxmin_landmarks`], [`random_landmarks`] | none; `k` landmarks for comparison |

mod baseline;
mod certify;
mod greedy;
mod iterative;
mod spt;

pub use baseline::{maxmin_landmarks, maxmin_landmarks_from, random_landmarks};
pub use certify::{certify, NetCertificate, SparseViolation};
pub use greedy::greedy_eps_net;
pub use iterative::{iterative_eps_net, iterative_eps_net_from};
pub use spt::{prune_candidates, spt_candidates, spt_pruning_eps_net, spt_pruning_eps_net_from};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

/// Landmark selection strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Greedy,
    Iterative,
    SptPruning,
    Maxmin,
    Random,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Greedy,
        Algorithm::Iterative,
        Algorithm::SptPruning,
        Algorithm::Maxmin,
        Algorithm::Random,
    ];

    /// The three constructions that target an ε-net.
    pub const NETS: [Algorithm; 3] = [
        Algorithm::Greedy,
        Algorithm::Iterative,
        Algorithm::SptPruning,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Iterative => "iterative",
            Algorithm::SptPruning => "spt_pruning",
            Algorithm::Maxmin => "maxmin",
            Algorithm::Random => "random",
        }
    }

    pub fn is_net(self) -> bool {
        Self::NETS.contains(&self)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::argument(format!("unknown algorithm `{s}`")))
    }
}

/// Landmarks in the order the algorithm emitted them.
///
/// `eps` is `None` for the baselines, which take a count instead of a radius.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandmarkSet {
    pub algorithm: Algorithm,
    pub eps: Option<f64>,
    pub seed: u64,
    pub landmarks: Vec<VertexId>,
}

impl LandmarkSet {
    pub fn len(&self) -> usize {
        self.landmarks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.landmarks.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.landmarks
    }

    /// Certifies against the set's own `eps`.
    pub fn certify(&self, graph: &WeightedGraph) -> Result<NetCertificate> {
        let eps = self
            .eps
            .ok_or_else(|| Error::argument("landmark set has no eps; use `certify` directly"))?;
        certify(graph, &self.landmarks, eps)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Runs one of the ε-net constructions with a random start.
pub fn build_net(
    graph: &WeightedGraph,
    algorithm: Algorithm,
    eps: f64,
    seed: u64,
) -> Result<LandmarkSet> {
    match algorithm {
        Algorithm::Greedy => greedy_eps_net(graph, eps),
        Algorithm::Iterative => iterative_eps_net(graph, eps, seed),
        Algorithm::SptPruning => spt_pruning_eps_net(graph, eps, seed),
        Algorithm::Maxmin | Algorithm::Random => Err(Error::argument(format!(
            "{algorithm} selects a landmark count, not a radius"
        ))),
    }
}

pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform element of an ascending snapshot.
pub(crate) fn pick_uniform<R: Rng>(rng: &mut R, sorted: &[VertexId]) -> VertexId {
    sorted[rng.random_range(0..sorted.len())]
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::argument(format!("eps must be positive and finite, got {eps}")))
    }
}
