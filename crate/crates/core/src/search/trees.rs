//! Isomorphism-free generation of free trees and connected unicyclic graphs.
//!
//! Rooted trees are catalogued by size; a rooted tree is its root plus a
//! non-increasing sequence of catalogue ids, so every isomorphism class gets
//! exactly one id. Free trees are read off the catalogue by rooting at the
//! center, unicyclic graphs as dihedrally minimal id sequences around a cycle.

use std::collections::BTreeMap;
use std::ops::Range;

use crate::canon::canonical_code;
use crate::graph::Graph;

/// Orders covered by the naive cross-check generators.
pub const NAIVE_MAX_ORDER: usize = 10;

#[derive(Clone, Debug)]
struct RootedTree {
    size: usize,
    height: usize,
    /// Catalogue ids, non-increasing.
    children: Vec<usize>,
}

/// All rooted trees up to a given order, ids grouped by size.
#[derive(Clone, Debug)]
pub struct RootedCatalog {
    trees: Vec<RootedTree>,
    by_size: Vec<Range<usize>>,
}

impl RootedCatalog {
    pub fn new(max_size: usize) -> Self {
        let mut cat = RootedCatalog { trees: Vec::new(), by_size: std::iter::once(0..0).collect() };
        for s in 1..=max_size {
            let start = cat.trees.len();
            let mut found = Vec::new();
            cat.child_multisets(s - 1, usize::MAX, &mut Vec::new(), &mut found);
            for children in found {
                let height = children.iter().map(|&c| cat.trees[c].height + 1).max().unwrap_or(0);
                cat.trees.push(RootedTree { size: s, height, children });
            }
            cat.by_size.push(start..cat.trees.len());
        }
        cat
    }

    fn child_multisets(&self, remaining: usize, max_id: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        let top = self.by_size[remaining].end.min(max_id.saturating_add(1));
        for id in (0..top).rev() {
            cur.push(id);
            self.child_multisets(remaining - self.trees[id].size, id, cur, out);
            cur.pop();
        }
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn count(&self, size: usize) -> usize {
        self.by_size[size].len()
    }

    pub fn ids(&self, size: usize) -> Range<usize> {
        self.by_size[size].clone()
    }

    pub fn size(&self, id: usize) -> usize {
        self.trees[id].size
    }

    pub fn height(&self, id: usize) -> usize {
        self.trees[id].height
    }

    /// Adds the tree `id` to `edges` with its root at `root`, new vertices from `next`.
    fn attach(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        let mut stack = vec![(id, root)];
        while let Some((t, at)) = stack.pop() {
            for &c in &self.trees[t].children {
                let v = *next;
                *next += 1;
                edges.push((at, v));
                stack.push((c, v));
            }
        }
    }

    pub fn realize(&self, id: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        self.attach(id, 0, &mut next, &mut edges);
        Graph::new(next, &edges).expect("rooted tree edges are valid")
    }

    /// Whether the tree has a unique center at its root.
    fn root_is_center(&self, id: usize) -> bool {
        let mut heights: Vec<usize> = self.trees[id].children.iter().map(|&c| self.trees[c].height).collect();
        heights.sort_unstable_by(|a, b| b.cmp(a));
        match heights.as_slice() {
            [] => true,
            [_] => false,
            [a, b, ..] => a == b,
        }
    }
}

/// All free trees of order `n`, one per isomorphism class, in a fixed order.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let cat = RootedCatalog::new(n);
    free_trees_from(&cat, n)
}

/// Free trees of order `n` using an existing catalogue of size at least `n`.
pub fn free_trees_from(cat: &RootedCatalog, n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = cat.ids(n).filter(|&id| cat.root_is_center(id)).map(|id| cat.realize(id)).collect();
    // Bicentral: two halves of equal height joined at the central edge.
    for a_size in n.div_ceil(2)..n {
        let b_size = n - a_size;
        for a in cat.ids(a_size) {
            for b in cat.ids(b_size) {
                if b > a || cat.height(a) != cat.height(b) {
                    continue;
                }
                let mut edges = vec![(0, 1)];
                let mut next = 2;
                cat.attach(a, 0, &mut next, &mut edges);
                cat.attach(b, 1, &mut next, &mut edges);
                out.push(Graph::new(n, &edges).expect("bicentral tree is valid"));
            }
        }
    }
    out
}

/// All connected unicyclic graphs of order `n`, one per isomorphism class.
pub fn unicyclic_graphs(n: usize) -> Vec<Graph> {
    if n < 3 {
        return Vec::new();
    }
    let cat = RootedCatalog::new(n - 2);
    let mut out = Vec::new();
    for c in 3..=n {
        let mut seq = Vec::with_capacity(c);
        cycle_sequences(&cat, c, n, &mut seq, &mut |seq| {
            if is_dihedral_min(seq) {
                out.push(realize_unicyclic(&cat, seq));
            }
        });
    }
    out
}

fn cycle_sequences(cat: &RootedCatalog, c: usize, remaining: usize, seq: &mut Vec<usize>, sink: &mut dyn FnMut(&[usize])) {
    let left = c - seq.len();
    if left == 0 {
        if remaining == 0 {
            sink(seq);
        }
        return;
    }
    // Every later slot needs at least one vertex.
    let max_size = remaining - (left - 1);
    let floor = seq.first().copied().unwrap_or(0);
    for size in 1..=max_size {
        if left == 1 && size != remaining {
            continue;
        }
        for id in cat.ids(size) {
            // A lexicographically least rotation starts with its smallest entry.
            if id < floor {
                continue;
            }
            seq.push(id);
            cycle_sequences(cat, c, remaining - size, seq, sink);
            seq.pop();
        }
    }
}

fn is_dihedral_min(seq: &[usize]) -> bool {
    let len = seq.len();
    for start in 0..len {
        for dir in [1isize, -1] {
            let rot = (0..len).map(|i| seq[(start as isize + dir * i as isize).rem_euclid(len as isize) as usize]);
            if rot.lt(seq.iter().copied()) {
                return false;
            }
        }
    }
    true
}

fn realize_unicyclic(cat: &RootedCatalog, seq: &[usize]) -> Graph {
    let c = seq.len();
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut next = c;
    for (i, &id) in seq.iter().enumerate() {
        cat.attach(id, i, &mut next, &mut edges);
    }
    Graph::new(next, &edges).expect("unicyclic graph is valid")
}

fn grow_by_leaves(level: Vec<Graph>, extra: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for g in level {
        for v in 0..g.order() {
            let (h, _) = g.with_pendant_path(v, 1);
            let code = canonical_code(&h).expect("trees and unicyclic graphs have codes");
            seen.entry(code).or_insert(h);
        }
    }
    for g in extra {
        seen.insert(canonical_code(&g).expect("code"), g);
    }
    seen.into_values().collect()
}

/// Free trees by repeated leaf addition and canonical-code deduplication.
pub fn naive_free_trees(n: usize) -> Option<Vec<Graph>> {
    if n > NAIVE_MAX_ORDER {
        return None;
    }
    if n == 0 {
        return Some(vec![Graph::empty(0)]);
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        level = grow_by_leaves(level, []);
    }
    Some(level)
}

/// Connected unicyclic graphs: the cycle itself plus leaf additions one order down.
pub fn naive_unicyclic_graphs(n: usize) -> Option<Vec<Graph>> {
    if n > NAIVE_MAX_ORDER {
        return None;
    }
    if n < 3 {
        return Some(Vec::new());
    }
    let mut level = vec![Graph::cycle(3)];
    for s in 4..=n {
        level = grow_by_leaves(level, [Graph::cycle(s)]);
    }
    Some(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn rooted_counts() {
        let cat = RootedCatalog::new(10);
        let counts: Vec<usize> = (1..=10).map(|s| cat.count(s)).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn free_tree_counts_small() {
        let counts: Vec<usize> = (0..=10).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn generated_trees_are_distinct_trees() {
        let trees = free_trees(9);
        let codes: BTreeSet<_> = trees.iter().map(|t| canonical_code(t).unwrap()).collect();
        assert_eq!(codes.len(), trees.len());
        assert!(trees.iter().all(|t| t.order() == 9 && t.is_tree()));
    }

    #[test]
    fn unicyclic_counts_small() {
        let counts: Vec<usize> = (3..=9).map(|n| unicyclic_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 13, 33, 89, 240]);
    }

    #[test]
    fn naive_generators_agree() {
        for n in 1..=8 {
            assert_eq!(naive_free_trees(n).unwrap().len(), free_trees(n).len());
            assert_eq!(naive_unicyclic_graphs(n).unwrap().len(), unicyclic_graphs(n).len());
        }
        assert!(naive_free_trees(11).is_none());
    }
}
