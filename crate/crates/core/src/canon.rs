//! Relabeling-invariant codes used as deduplication keys.
//!
//! Trees are encoded by their center-rooted parenthesis code, unicyclic graphs
//! by the dihedrally minimal sequence of rooted codes hanging off the cycle, and
//! any other graph with at most ten vertices by the best adjacency string over
//! the orderings compatible with a color-refined vertex partition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

pub const GENERIC_MAX_ORDER: usize = 10;

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.first() {
            Some(b'G') => {
                write!(f, "G")?;
                for b in &self.0[1..] {
                    write!(f, "{b:02x}")?;
                }
                Ok(())
            }
            _ => f.write_str(&String::from_utf8_lossy(&self.0)),
        }
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    if g.order() == 0 {
        return Ok(CanonicalCode(vec![b'G', 0]));
    }
    if g.is_tree() {
        return Ok(CanonicalCode(tree_code(g)));
    }
    if g.is_unicyclic() {
        return Ok(CanonicalCode(unicyclic_code(g)));
    }
    if g.order() <= GENERIC_MAX_ORDER {
        return Ok(CanonicalCode(generic_code(g)));
    }
    Err(GraphError::UnsupportedFamily(format!(
        "n={} with {} edges is neither a tree nor unicyclic",
        g.order(),
        g.size()
    )))
}

/// Parenthesis code of the subtree at `root`, not crossing into `blocked` vertices.
pub(crate) fn rooted_code(g: &Graph, root: usize, blocked: &[bool]) -> Vec<u8> {
    // Iterative post-order so long paths do not exhaust the stack.
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX && !blocked[w] {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<Vec<u8>> = g
            .neighbors(u)
            .iter()
            .filter(|&&w| w != root && parent[w] == u && w != u)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(OPEN);
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(CLOSE);
        codes[u] = code;
    }
    std::mem::take(&mut codes[root])
}

/// One or two central vertices of a tree.
pub(crate) fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn tree_code(g: &Graph) -> Vec<u8> {
    let blocked = vec![false; g.order()];
    let best = tree_centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, &blocked))
        .min()
        .expect("a tree has a center");
    let mut out = Vec::with_capacity(best.len() + 1);
    out.push(b'T');
    out.extend(best);
    out
}

fn unicyclic_code(g: &Graph) -> Vec<u8> {
    let cycle = g.find_cycle().expect("unicyclic graph has a cycle");
    let mut blocked = vec![false; g.order()];
    for &c in &cycle {
        blocked[c] = true;
    }
    let seq: Vec<Vec<u8>> = cycle
        .iter()
        .map(|&c| {
            blocked[c] = false;
            let code = rooted_code(g, c, &blocked);
            blocked[c] = true;
            code
        })
        .collect();
    let best = dihedral_min(&seq);
    let mut out = vec![b'U'];
    for code in best {
        out.extend_from_slice(code);
    }
    out
}

/// Lexicographically least rotation or reflection of a cyclic sequence.
pub(crate) fn dihedral_min<T: Ord>(seq: &[T]) -> Vec<&T> {
    let len = seq.len();
    let mut best: Option<Vec<&T>> = None;
    for start in 0..len {
        for dir in [1isize, -1] {
            let cand: Vec<&T> = (0..len as isize)
                .map(|i| &seq[((start as isize + dir * i).rem_euclid(len as isize)) as usize])
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Stable coloring by iterated neighbor-color multisets, with label-free color ids.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colors = next;
    }
}

fn generic_code(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let colors = refined_colors(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_color: Vec<(usize, usize)> = (0..n).map(|v| (colors[v], v)).collect();
    by_color.sort_unstable();
    for (c, v) in by_color {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == c => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut adj = [0u16; GENERIC_MAX_ORDER];
    for (u, row) in adj.iter_mut().enumerate().take(n) {
        for &w in g.neighbors(u) {
            *row |= 1 << w;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = 0u64;
    search_orders(&cells, 0, &mut order, &adj, &mut best);
    let mut out = vec![b'G', n as u8];
    out.extend_from_slice(&best.to_be_bytes());
    out
}

fn search_orders(
    cells: &[Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    adj: &[u16; GENERIC_MAX_ORDER],
    best: &mut u64,
) {
    if cell == cells.len() {
        let bits = adjacency_bits(order, adj);
        if bits > *best {
            *best = bits;
        }
        return;
    }
    let members = &cells[cell];
    let start = order.len();
    permute(members, &mut vec![false; members.len()], order, start, &mut |order| {
        search_orders(cells, cell + 1, order, adj, best)
    });
}

fn permute(
    members: &[usize],
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    start: usize,
    sink: &mut dyn FnMut(&mut Vec<usize>),
) {
    if order.len() - start == members.len() {
        sink(order);
        return;
    }
    for i in 0..members.len() {
        if !used[i] {
            used[i] = true;
            order.push(members[i]);
            permute(members, used, order, start, sink);
            order.pop();
            used[i] = false;
        }
    }
}

fn adjacency_bits(order: &[usize], adj: &[u16; GENERIC_MAX_ORDER]) -> u64 {
    let mut bits = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            bits = (bits << 1) | u64::from((adj[order[i]] >> order[j]) & 1);
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(g: &Graph) -> CanonicalCode {
        canonical_code(g).unwrap()
    }

    #[test]
    fn path_relabelings_agree() {
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(code(&a), code(&b));
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(code(&Graph::path(4)), code(&Graph::star(3)));
    }

    #[test]
    fn unicyclic_relabelings_agree() {
        let a = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let b = a.permuted(&[3, 5, 0, 1, 2, 4]);
        assert_eq!(code(&a), code(&b));
        let c = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_ne!(code(&a), code(&c));
    }

    #[test]
    fn unicyclic_distinguishes_pendant_spacing() {
        // C6 with pendants at distance 1 vs 2 vs 3 apart.
        let base = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
        let with = |a: usize, b: usize| {
            let mut e = base.to_vec();
            e.push((a, 6));
            e.push((b, 7));
            Graph::new(8, &e).unwrap()
        };
        let codes = [code(&with(0, 1)), code(&with(0, 2)), code(&with(0, 3))];
        assert_ne!(codes[0], codes[1]);
        assert_ne!(codes[1], codes[2]);
        assert_eq!(code(&with(0, 2)), code(&with(1, 5)));
    }

    #[test]
    fn generic_small_graphs() {
        let k4 = Graph::complete(4);
        let k4e = k4.remove_edge(0, 1);
        let k4e2 = k4.remove_edge(2, 3);
        assert_eq!(code(&k4e), code(&k4e2));
        assert_ne!(code(&k4), code(&k4e));
    }

    #[test]
    fn large_dense_unsupported() {
        assert!(canonical_code(&Graph::complete(11)).is_err());
    }

    #[test]
    fn dihedral_min_picks_reflection() {
        let seq = [3, 1, 2];
        let best: Vec<i32> = dihedral_min(&seq).into_iter().copied().collect();
        assert_eq!(best, vec![1, 2, 3]);
    }
}
