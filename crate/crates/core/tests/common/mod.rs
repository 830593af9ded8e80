#![allow(dead_code)]

use std::collections::BTreeSet;

use netwitness::complex::Filtration;
use netwitness::generators::{random_connected_graph, Weights};
use netwitness::graph::WeightedGraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const UNIFORM: Weights = Weights::Uniform { low: 0.1, high: 2.0 };

/// Connected graph with `n` vertices and between `n - 1` and `2n - 2` edges.
pub fn sparse_graph(rng: &mut ChaCha8Rng, n: usize, weights: Weights) -> WeightedGraph {
    let max_edges = n * (n - 1) / 2;
    let edges = (n - 1 + rng.random_range(0..n)).min(max_edges);
    random_connected_graph(n, edges, weights, rng.random()).unwrap()
}

/// Same topology with weights redrawn as multiples of 1/8 in `[1/8, 2]`.
/// Every path sum is then exact, so oracle distances compare bit for bit.
pub fn dyadic(g: &WeightedGraph, rng: &mut ChaCha8Rng) -> WeightedGraph {
    let edges: Vec<_> = g
        .edges()
        .map(|(u, v, _)| (u, v, rng.random_range(1..=16) as f64 / 8.0))
        .collect();
    WeightedGraph::from_edges(g.vertex_count(), edges).unwrap()
}

/// All-pairs shortest paths by Floyd–Warshall; unreachable pairs are infinite.
pub fn floyd_warshall(g: &WeightedGraph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for (u, v, w) in g.edges() {
        d[u][v] = d[u][v].min(w);
        d[v][u] = d[v][u].min(w);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = d[i][k] + d[k][j];
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    d
}

/// `count` distance quantiles from the full distance matrix, deduplicated.
pub fn quantiles(d: &[Vec<f64>], count: usize) -> Vec<f64> {
    let mut all: Vec<f64> = d
        .iter()
        .flatten()
        .copied()
        .filter(|x| *x > 0.0 && x.is_finite())
        .collect();
    all.sort_by(f64::total_cmp);
    let mut q: Vec<f64> = (1..=count)
        .map(|k| all[(k * all.len()) / (count + 1)])
        .collect();
    q.dedup();
    q
}

/// Lazy witness edge birth straight from the definition, on the full matrix.
pub fn lazy_witness_birth(d: &[Vec<f64>], landmarks: &[usize], a: usize, b: usize) -> f64 {
    let nearest = |w: usize| landmarks.iter().map(|&l| d[w][l]).fold(f64::INFINITY, f64::min);
    let best = (0..d.len())
        .map(|w| d[w][landmarks[a]].max(d[w][landmarks[b]]) - nearest(w))
        .fold(f64::INFINITY, f64::min);
    best.max(0.0)
}

/// Simplices of the complex at `alpha`, as vertex tuples.
pub fn simplex_set(f: &Filtration, alpha: f64) -> BTreeSet<Vec<usize>> {
    f.simplices()
        .iter()
        .filter(|s| s.value() <= alpha)
        .map(|s| s.vertices().to_vec())
        .collect()
}

fn linf(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).abs().max((p.1 - q.1).abs())
}

/// Bottleneck distance by enumerating every partial matching.
pub fn brute_bottleneck(p: &[(f64, f64)], q: &[(f64, f64)]) -> f64 {
    fn go(i: usize, p: &[(f64, f64)], q: &[(f64, f64)], used: &mut Vec<bool>, cost: f64, best: &mut f64) {
        if cost >= *best {
            return;
        }
        if i == p.len() {
            let rest = q
                .iter()
                .zip(used.iter())
                .filter(|(_, u)| !**u)
                .map(|(x, _)| (x.1 - x.0) / 2.0)
                .fold(cost, f64::max);
            *best = best.min(rest);
            return;
        }
        go(i + 1, p, q, used, cost.max((p[i].1 - p[i].0) / 2.0), best);
        for j in 0..q.len() {
            if !used[j] {
                used[j] = true;
                go(i + 1, p, q, used, cost.max(linf(p[i], q[j])), best);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(0, p, q, &mut vec![false; q.len()], 0.0, &mut best);
    best
}

/// Up to `max` random points with `death > birth`, on a coarse grid so ties occur.
pub fn random_points(rng: &mut ChaCha8Rng, max: usize) -> Vec<(f64, f64)> {
    let n = rng.random_range(0..=max);
    (0..n)
        .map(|_| {
            let b = rng.random_range(0..20) as f64 * 0.25;
            let d = b + rng.random_range(1..20) as f64 * 0.25;
            (b, d)
        })
        .collect()
}
