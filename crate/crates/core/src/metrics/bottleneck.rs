use std::collections::VecDeque;

use super::PartialDiagram;
use crate::error::{Error, Result};

fn linf(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).abs().max((p.1 - q.1).abs())
}

/// L∞ distance from a point to its projection on the diagonal.
fn to_diagonal(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

/// Bottleneck distance between two diagrams of the same dimension and scale.
///
/// The answer is one of the pairwise L∞ distances or diagonal gaps, so it is
/// found exactly by binary search over those candidates, testing each with
/// a perfect-matching check on the augmented bipartite graph where every
/// point may also match its own diagonal projection.
pub fn bottleneck(a: &PartialDiagram, b: &PartialDiagram) -> Result<f64> {
    if a.scale() != b.scale() {
        return Err(Error::argument("diagrams are in different scales"));
    }
    if a.dim() != b.dim() {
        return Err(Error::argument(format!(
            "diagrams have different dimensions ({} and {})",
            a.dim(),
            b.dim()
        )));
    }
    let (p, q) = (a.points(), b.points());
    let mut candidates: Vec<f64> = Vec::with_capacity(p.len() * q.len() + p.len() + q.len() + 1);
    candidates.push(0.0);
    candidates.extend(p.iter().chain(q).map(|&x| to_diagonal(x)));
    for &x in p {
        candidates.extend(q.iter().map(|&y| linf(x, y)));
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    // The largest diagonal gap is always feasible, so the search terminates.
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if matchable(p, q, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[lo])
}

/// Whether the augmented bipartite graph has a perfect matching using only
/// pairs within `delta`.
///
/// Left side: points of `p`, then diagonal copies of `q`. Right side:
/// points of `q`, then diagonal copies of `p`. Diagonal copies match each
/// other for free.
fn matchable(p: &[(f64, f64)], q: &[(f64, f64)], delta: f64) -> bool {
    let (n, m) = (p.len(), q.len());
    let size = n + m;
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); size];
    for (i, &x) in p.iter().enumerate() {
        for (j, &y) in q.iter().enumerate() {
            if linf(x, y) <= delta {
                adjacency[i].push(j);
            }
        }
        if to_diagonal(x) <= delta {
            adjacency[i].push(m + i);
        }
    }
    for (j, &y) in q.iter().enumerate() {
        let left = n + j;
        if to_diagonal(y) <= delta {
            adjacency[left].push(j);
        }
        adjacency[left].extend(m..m + n);
    }
    HopcroftKarp::new(&adjacency, size).max_matching() == size
}

/// Maximum bipartite matching for equal-sized sides.
struct HopcroftKarp<'a> {
    adjacency: &'a [Vec<usize>],
    match_left: Vec<Option<usize>>,
    match_right: Vec<Option<usize>>,
    layer: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    const UNREACHED: usize = usize::MAX;

    fn new(adjacency: &'a [Vec<usize>], right_size: usize) -> Self {
        Self {
            adjacency,
            match_left: vec![None; adjacency.len()],
            match_right: vec![None; right_size],
            layer: vec![Self::UNREACHED; adjacency.len()],
        }
    }

    fn max_matching(mut self) -> usize {
        let mut size = 0;
        while self.build_layers() {
            for u in 0..self.adjacency.len() {
                if self.match_left[u].is_none() && self.augment(u) {
                    size += 1;
                }
            }
        }
        size
    }

    /// Breadth-first layering from free left vertices; true if some free
    /// right vertex is reachable.
    fn build_layers(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.adjacency.len() {
            if self.match_left[u].is_none() {
                self.layer[u] = 0;
                queue.push_back(u);
            } else {
                self.layer[u] = Self::UNREACHED;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                match self.match_right[v] {
                    None => found = true,
                    Some(w) if self.layer[w] == Self::UNREACHED => {
                        self.layer[w] = self.layer[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn augment(&mut self, u: usize) -> bool {
        for k in 0..self.adjacency[u].len() {
            let v = self.adjacency[u][k];
            let free_or_deeper = match self.match_right[v] {
                None => true,
                Some(w) => self.layer[w] == self.layer[u] + 1 && self.augment(w),
            };
            if free_or_deeper {
                self.match_left[u] = Some(v);
                self.match_right[v] = Some(u);
                return true;
            }
        }
        self.layer[u] = Self::UNREACHED;
        false
    }
}
