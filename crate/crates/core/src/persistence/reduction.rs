use std::collections::HashMap;

use super::{PersistenceDiagram, PersistencePoint};
use crate::complex::Filtration;
use crate::error::{Error, Result};

/// Z/2 column reduction state: sparse columns stored as sorted row indices,
/// and the column that owns each pivot (its largest row index).
#[derive(Debug, Default)]
pub struct ReductionState {
    columns: Vec<Vec<usize>>,
    pivot_owner: HashMap<usize, usize>,
}

impl ReductionState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `column` against the columns stored so far. A non-empty result
    /// is stored and its pivot returned; a zero column returns `None`.
    pub fn push(&mut self, mut column: Vec<usize>) -> Option<usize> {
        while let Some(&low) = column.last() {
            match self.pivot_owner.get(&low) {
                Some(&owner) => column = symmetric_difference(&column, &self.columns[owner]),
                None => {
                    self.pivot_owner.insert(low, self.columns.len());
                    self.columns.push(column);
                    return Some(low);
                }
            }
        }
        None
    }

    /// Stored (non-zero) columns.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Every stored column has a pivot no other stored column shares.
    pub fn pivots_unique(&self) -> bool {
        self.pivot_owner.len() == self.columns.len()
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(i, c)| c.last().and_then(|l| self.pivot_owner.get(l)) == Some(&i))
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Persistence diagram in dimensions `0..=max_dim` (`max_dim` ≤ 1).
///
/// Dimension 0 reduces the edge boundary columns in filtration order.
/// Dimension 1 reduces coboundary columns (edge → cofacet triangles) of the
/// edges that did not kill a component, in reverse filtration order; those
/// killing edges are cleared since their columns are known to vanish. Row
/// indices of coboundary columns are reversed so that the same
/// largest-pivot reduction applies. Both routes yield the same pairs as the
/// plain boundary-matrix reduction.
pub fn compute_persistence(filtration: &Filtration, max_dim: usize) -> Result<PersistenceDiagram> {
    if max_dim > 1 {
        return Err(Error::Unsupported(format!(
            "persistence is computed up to dimension 1, got {max_dim}"
        )));
    }
    filtration.validate()?;
    let simplices = filtration.simplices();
    let total = simplices.len();

    let mut vertex_index = HashMap::new();
    let mut edge_index = HashMap::new();
    for (i, s) in simplices.iter().enumerate() {
        match *s.vertices() {
            [v] => {
                vertex_index.insert(v, i);
            }
            [a, b] => {
                edge_index.insert((a, b), i);
            }
            _ => {}
        }
    }

    let mut points = Vec::new();
    let mut paired = vec![false; total];

    let mut boundary = ReductionState::new();
    for (i, s) in simplices.iter().enumerate() {
        if let [a, b] = *s.vertices() {
            let mut column = vec![vertex_index[&a], vertex_index[&b]];
            column.sort_unstable();
            if let Some(low) = boundary.push(column) {
                paired[low] = true;
                paired[i] = true;
                points.push(PersistencePoint::new(0, simplices[low].value(), s.value()));
            }
        }
    }
    for (i, s) in simplices.iter().enumerate() {
        if s.dim() == 0 && !paired[i] {
            points.push(PersistencePoint::new(0, s.value(), f64::INFINITY));
        }
    }

    if max_dim >= 1 {
        let mut cofacets: HashMap<usize, Vec<usize>> = HashMap::new();
        for (t, s) in simplices.iter().enumerate() {
            if let [a, b, c] = *s.vertices() {
                for key in [(a, b), (a, c), (b, c)] {
                    let e = edge_index[&key];
                    if !paired[e] {
                        cofacets.entry(e).or_default().push(t);
                    }
                }
            }
        }
        let reversed = |i: usize| total - 1 - i;
        let mut coboundary = ReductionState::new();
        for (e, s) in simplices.iter().enumerate().rev() {
            if s.dim() != 1 || paired[e] {
                continue;
            }
            // Ascending filtration indices become descending after reversal.
            let column: Vec<usize> = cofacets
                .remove(&e)
                .unwrap_or_default()
                .into_iter()
                .rev()
                .map(reversed)
                .collect();
            match coboundary.push(column) {
                Some(low) => {
                    let t = reversed(low);
                    points.push(PersistencePoint::new(1, s.value(), simplices[t].value()));
                }
                None => points.push(PersistencePoint::new(1, s.value(), f64::INFINITY)),
            }
        }
    }

    Ok(PersistenceDiagram::new(points, filtration.alpha_max()))
}
