use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::{VertexId, WeightedGraph};
use crate::error::{Error, Result};

/// Stable mapping between the ids found in an edge-list file and the dense
/// `0..n` ids used by [`WeightedGraph`]. Dense ids follow ascending order of
/// the original ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdMap {
    original: Vec<u64>,
}

impl IdMap {
    pub fn len(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original.is_empty()
    }

    pub fn original(&self, v: VertexId) -> Option<u64> {
        self.original.get(v).copied()
    }

    pub fn dense(&self, original: u64) -> Option<VertexId> {
        self.original.binary_search(&original).ok()
    }

    /// `(dense, original)` pairs in dense order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u64)> + '_ {
        self.original.iter().copied().enumerate()
    }
}

/// A parsed edge list: the graph plus the id map used to compact it.
#[derive(Clone, Debug)]
pub struct EdgeList {
    pub graph: WeightedGraph,
    pub ids: IdMap,
}

/// Parses the whitespace-separated `u v [w]` edge-list format.
///
/// Lines starting with `#` or `%` are comments. When `weighted` is false any
/// columns after the first two are ignored and every edge gets weight 1.
pub fn load_edge_list<R: BufRead>(reader: R, weighted: bool) -> Result<EdgeList> {
    let mut raw = Vec::new();
    for (index, line) in reader.lines().enumerate() {
        let line_no = index + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let u = parse_id(fields.next(), line_no)?;
        let v = parse_id(fields.next(), line_no)?;
        let w = if weighted {
            let token = fields.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "missing edge weight".into(),
            })?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected `u v w`".into(),
                });
            }
            token.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid weight `{token}`"),
            })?
        } else {
            1.0
        };
        if u == v {
            return Err(Error::Validation {
                line: line_no,
                message: format!("self-loop on vertex {u}"),
            });
        }
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::Validation {
                line: line_no,
                message: format!("edge weight must be positive, got {w}"),
            });
        }
        raw.push((u, v, w));
    }

    let mut original: Vec<u64> = raw.iter().flat_map(|&(u, v, _)| [u, v]).collect();
    original.sort_unstable();
    original.dedup();
    let ids = IdMap { original };
    let edges = raw.into_iter().map(|(u, v, w)| {
        (
            ids.dense(u).expect("id collected above"),
            ids.dense(v).expect("id collected above"),
            w,
        )
    });
    let graph = WeightedGraph::from_edges(ids.len(), edges)?;
    Ok(EdgeList { graph, ids })
}

/// Opens `path` and parses it with [`load_edge_list`].
pub fn read_edge_list_file(path: impl AsRef<Path>, weighted: bool) -> Result<EdgeList> {
    let file = File::open(path)?;
    load_edge_list(BufReader::new(file), weighted)
}

fn parse_id(token: Option<&str>, line: usize) -> Result<u64> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        message: "expected `u v [w]`".into(),
    })?;
    token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid vertex id `{token}`"),
    })
}
