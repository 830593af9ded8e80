use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use super::{check_eps, Algorithm, LandmarkSet};
use crate::error::Result;
use crate::graph::search::Search;
use crate::graph::WeightedGraph;

/// Greedy ε-net: repeatedly selects the uncovered vertex whose ε-ball holds
/// the most uncovered vertices (ties go to the smallest id) and covers its ball.
///
/// Counts sit in a max-heap as upper bounds. A popped vertex is recounted
/// from its own search; if the count dropped it goes back in, otherwise it
/// is the true maximum. Counting from the popped vertex itself keeps the
/// result exact even when floating-point sums make `d(u, v)` and `d(v, u)`
/// disagree in the last bit.
pub fn greedy_eps_net(graph: &WeightedGraph, eps: f64) -> Result<LandmarkSet> {
    check_eps(eps)?;
    let n = graph.vertex_count();
    let counts: Vec<usize> = graph
        .vertices()
        .into_par_iter()
        .map_init(
            || Search::new(n),
            |search, v| {
                search.run(graph, &[v], eps);
                search.settled_order().len()
            },
        )
        .collect();

    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        counts.iter().enumerate().map(|(v, &c)| (c, Reverse(v))).collect();
    let mut marked = vec![false; n];
    let mut remaining = n;
    let mut landmarks = Vec::new();
    let mut search = Search::new(n);

    while remaining > 0 {
        let (bound, Reverse(v)) = heap.pop().expect("an uncovered vertex is always queued");
        if marked[v] {
            continue;
        }
        search.run(graph, &[v], eps);
        let fresh = search.settled_order().iter().filter(|&&u| !marked[u]).count();
        if fresh < bound {
            heap.push((fresh, Reverse(v)));
            continue;
        }
        landmarks.push(v);
        for &u in search.settled_order() {
            if !marked[u] {
                marked[u] = true;
                remaining -= 1;
            }
        }
    }

    Ok(LandmarkSet {
        algorithm: Algorithm::Greedy,
        eps: Some(eps),
        seed: 0,
        landmarks,
    })
}
