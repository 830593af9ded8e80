use super::{distances_from, VertexId, WeightedGraph};
use crate::error::{Error, Result};

/// Spanning tree whose root paths realise geodesic distances.
#[derive(Clone, Debug, PartialEq)]
pub struct ShortestPathTree {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<(VertexId, f64)>>,
    depth: Vec<f64>,
}

impl ShortestPathTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    /// Children of `v` with their edge weights, in ascending id order.
    pub fn children(&self, v: VertexId) -> &[(VertexId, f64)] {
        &self.children[v]
    }

    /// Geodesic distance from the root.
    pub fn depth(&self, v: VertexId) -> f64 {
        self.depth[v]
    }

    pub fn depths(&self) -> &[f64] {
        &self.depth
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }
}

/// Shortest-path tree rooted at `root`.
///
/// Among the predecessors that realise a vertex's distance, the one with the
/// smallest id becomes its parent.
pub fn shortest_path_tree(graph: &WeightedGraph, root: VertexId) -> Result<ShortestPathTree> {
    graph.check_vertex(root)?;
    let depth = distances_from(graph, root)?;
    if let Some(second) = depth.iter().position(|d| d.is_infinite()) {
        return Err(Error::Disconnected { first: root, second });
    }

    let n = graph.vertex_count();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    for v in graph.vertices().filter(|&v| v != root) {
        // Distances are sums of input weights along the chosen route, so the
        // realising predecessor matches exactly.
        let p = graph
            .neighbors(v)
            .iter()
            .find(|&&(u, w)| depth[u] + w == depth[v])
            .map(|&(u, w)| (u, w))
            .expect("every non-root vertex has a tight predecessor");
        parent[v] = Some(p.0);
        children[p.0].push((v, p.1));
    }
    Ok(ShortestPathTree {
        root,
        parent,
        children,
        depth,
    })
}
