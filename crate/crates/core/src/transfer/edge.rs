//! Moving one vertex between two pendant paths: `G^{(j)}_{k,l}` against
//! `G^{(j)}_{k+1,l-1}`.

use std::cmp::Ordering;

use crate::error::TransferError;
use crate::graph::Graph;
use crate::root::compare_rho;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeTransfer {
    /// Predicted ordering of `ρ(left)` against `ρ(right)`.
    pub predicted: Ordering,
    /// `G^{(j)}_{k,l}`.
    pub left: Graph,
    /// `G^{(j)}_{k+1,l-1}`.
    pub right: Graph,
}

impl EdgeTransfer {
    /// Exact ordering of the two spectral radii.
    pub fn actual(&self) -> Ordering {
        compare_rho(&self.left, &self.right)
    }

    pub fn holds(&self) -> bool {
        self.actual() == self.predicted
    }
}

/// Path `u = w0, ..., wj = v` whose inner vertices have degree two.
fn inner_path(g: &Graph, u: usize, v: usize, j: usize) -> Option<Vec<usize>> {
    for &first in g.neighbors(u) {
        let mut path = vec![u, first];
        while path.len() <= j {
            let cur = *path.last().expect("nonempty");
            if g.degree(cur) != 2 {
                break;
            }
            let prev = path[path.len() - 2];
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
            path.push(next);
        }
        if path.len() == j + 1 && path[j] == v {
            return Some(path);
        }
    }
    None
}

/// Builds both graphs and predicts their order: equal exactly when `j = 0`
/// and `k = l - 1` (the graphs are then isomorphic), otherwise the left one
/// is strictly larger.
///
/// Requires `u`, `v` of degree at least two, joined by an induced path of
/// length `j` whose inner vertices have degree two in `G` (`u = v` iff
/// `j = 0`), `l > 0` and `k - l ≥ j - 1`.
pub fn edge_transfer_compare(
    g: &Graph,
    u: usize,
    v: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<EdgeTransfer, TransferError> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(TransferError::BadRoot(x));
        }
        if g.degree(x) < 2 {
            return Err(TransferError::Hypothesis(format!("vertex {x} has degree below 2")));
        }
    }
    if l == 0 {
        return Err(TransferError::Hypothesis("l must be positive".into()));
    }
    if (k as i64) - (l as i64) < (j as i64) - 1 {
        return Err(TransferError::Hypothesis(format!("k - l = {} < j - 1 = {}", k as i64 - l as i64, j as i64 - 1)));
    }
    if j == 0 {
        if u != v {
            return Err(TransferError::Hypothesis("j = 0 needs u = v".into()));
        }
    } else {
        if u == v {
            return Err(TransferError::Hypothesis("u = v needs j = 0".into()));
        }
        if inner_path(g, u, v, j).is_none() || (j >= 2 && g.has_edge(u, v)) {
            return Err(TransferError::Hypothesis(format!(
                "no induced path of length {j} with inner vertices of degree 2 between {u} and {v}"
            )));
        }
    }
    let attach = |a: usize, b: usize| {
        let (h, _) = g.with_pendant_path(u, a);
        h.with_pendant_path(v, b).0
    };
    let predicted = if j == 0 && k + 1 == l { Ordering::Equal } else { Ordering::Greater };
    Ok(EdgeTransfer { predicted, left: attach(k, l), right: attach(k + 1, l - 1) })
}
