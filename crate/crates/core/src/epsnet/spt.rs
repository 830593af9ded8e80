use std::collections::VecDeque;

use rand::Rng;

use super::{check_eps, seeded_rng, Algorithm, LandmarkSet};
use crate::error::{Error, Result};
use crate::graph::search::Search;
use crate::graph::{shortest_path_tree, ShortestPathTree, VertexId, WeightedGraph};

/// Shortest-path-tree pruning net rooted at a uniformly random vertex.
///
/// The output is ε-sparse and a 2ε-sample of the graph. It is usually, but
/// not always, an ε-sample; check with [`super::certify`].
pub fn spt_pruning_eps_net(graph: &WeightedGraph, eps: f64, seed: u64) -> Result<LandmarkSet> {
    check_eps(eps)?;
    if graph.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let root = seeded_rng(seed).random_range(0..graph.vertex_count());
    build(graph, eps, root, seed)
}

/// Same as [`spt_pruning_eps_net`] with an explicit root.
pub fn spt_pruning_eps_net_from(
    graph: &WeightedGraph,
    eps: f64,
    root: VertexId,
    seed: u64,
) -> Result<LandmarkSet> {
    check_eps(eps)?;
    build(graph, eps, root, seed)
}

fn build(graph: &WeightedGraph, eps: f64, root: VertexId, seed: u64) -> Result<LandmarkSet> {
    let tree = shortest_path_tree(graph, root)?;
    let candidates = spt_candidates(&tree, eps);
    Ok(LandmarkSet {
        algorithm: Algorithm::SptPruning,
        eps: Some(eps),
        seed,
        landmarks: prune_candidates(graph, &candidates, eps),
    })
}

/// Level-order ε-net of the tree itself, measured in tree distance.
///
/// The root is the first candidate. From each candidate the sweep covers
/// every tree descendant within ε; a descendant first reached beyond ε
/// becomes the next candidate and starts its own sweep.
pub fn spt_candidates(tree: &ShortestPathTree, eps: f64) -> Vec<VertexId> {
    let n = tree.vertex_count();
    let mut marked = vec![false; n];
    let mut offset = vec![0.0; n];
    let mut candidates = vec![tree.root()];
    let mut pending = VecDeque::from([tree.root()]);
    let mut sweep = VecDeque::new();

    while let Some(c) = pending.pop_front() {
        marked[c] = true;
        offset[c] = 0.0;
        sweep.push_back(c);
        while let Some(v) = sweep.pop_front() {
            // Parents are always marked before their children are visited.
            for &(child, w) in tree.children(v) {
                if marked[child] {
                    continue;
                }
                let d = offset[v] + w;
                if d <= eps {
                    marked[child] = true;
                    offset[child] = d;
                    sweep.push_back(child);
                } else {
                    candidates.push(child);
                    pending.push_back(child);
                }
            }
        }
    }
    candidates
}

/// Scans candidates in order, keeping one unless a kept landmark's graph
/// ε-ball already covers it.
pub fn prune_candidates(graph: &WeightedGraph, candidates: &[VertexId], eps: f64) -> Vec<VertexId> {
    let mut marked = vec![false; graph.vertex_count()];
    let mut search = Search::new(graph.vertex_count());
    let mut kept = Vec::new();
    for &c in candidates {
        if marked[c] {
            continue;
        }
        kept.push(c);
        search.run(graph, &[c], eps);
        for &v in search.settled_order() {
            marked[v] = true;
        }
    }
    kept
}
