//! Finite simple undirected graphs and the metric queries used by the searches.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and deduplicated, so two graphs with the same
/// edge set compare equal regardless of the order edges were supplied in.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// Diameter of a graph, or the marker that some pair is unreachable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Breadth-first hop distances from `v`; `None` marks unreachable vertices.
    pub fn distances(&self, v: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Largest finite distance from `v`, or `None` if something is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let dist = self.distances(v).ok()?;
        dist.into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    pub fn diameter(&self) -> Result<Diameter, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut best = 0;
        for v in 0..self.n {
            match self.eccentricity(v) {
                Some(e) => best = best.max(e),
                None => return Ok(Diameter::Disconnected),
            }
        }
        Ok(Diameter::Finite(best))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_count() == 1
    }

    /// Connected components, each as a sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Cyclomatic number `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        self.size() + self.component_count() - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.size() == self.n && self.is_connected()
    }

    /// Subgraph induced by `keep`, relabeled in increasing order of the kept vertices.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph { n: keep.len(), adj }
    }

    /// The graph with the listed vertices removed (remaining vertices relabeled in order).
    pub fn remove_vertices(&self, gone: &[usize]) -> Graph {
        let mut drop = vec![false; self.n];
        for &v in gone {
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        self.induced(&keep)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Appends a pendant path with `len` new vertices hanging from `at`.
    /// Returns the new graph and the far end of the path (or `at` when `len == 0`).
    pub fn with_pendant_path(&self, at: usize, len: usize) -> (Graph, usize) {
        let mut edges = self.edges();
        let mut prev = at;
        for i in 0..len {
            let w = self.n + i;
            edges.push((prev, w));
            prev = w;
        }
        (Graph::new(self.n + len, &edges).expect("pendant path is valid"), prev)
    }

    /// Replaces edge `uv` by a path `u - w - v` through a new vertex.
    pub fn subdivide(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let w = self.n;
        let mut edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        edges.push((u, w));
        edges.push((w, v));
        Graph::new(self.n + 1, &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("permutation preserves validity")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, &edges).expect("union is valid")
    }

    /// Vertices of the unique cycle of a unicyclic component, in cyclic order.
    /// Returns `None` when the graph has no cycle.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        // Peel leaves; what remains of a unicyclic graph is its cycle.
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let start = (0..self.n).find(|&v| !removed[v])?;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| !removed[w] && w != prev)?;
            if next == start {
                break;
            }
            if cycle.contains(&next) {
                // More than one cycle in the core; not unicyclic.
                return None;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
            if cycle.len() > self.n {
                return None;
            }
        }
        Some(cycle)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn singleton_and_triangle() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        let t = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(t.size(), 3);
        assert!(t.is_unicyclic());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::Loop(1)));
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = Graph::star(3);
        let deg_sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.size());
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn path_distances() {
        let d = Graph::path(5).distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(3), Some(4)]);
        assert_eq!(Graph::path(5).diameter().unwrap(), Diameter::Finite(4));
    }

    #[test]
    fn cycle_diameter() {
        let g = Graph::cycle(6);
        assert_eq!(g.eccentricity(2), Some(3));
        assert_eq!(g.diameter().unwrap(), Diameter::Finite(3));
    }

    #[test]
    fn disconnected_is_distinct() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let d = g.distances(0).unwrap();
        assert_eq!(d[2], None);
        assert_eq!(d[3], None);
        assert_eq!(g.diameter().unwrap(), Diameter::Disconnected);
        assert_eq!(g.diameter().unwrap().finite(), None);
    }

    #[test]
    fn find_cycle_on_unicyclic() {
        // C5 with a pendant at vertex 0
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let mut c = g.find_cycle().unwrap();
        c.sort_unstable();
        assert_eq!(c, vec![0, 1, 2, 3, 4]);
        assert!(Graph::path(4).find_cycle().is_none());
    }

    #[test]
    fn subdivide_adds_vertex() {
        let g = Graph::path(3).subdivide(0, 1).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.diameter().unwrap(), Diameter::Finite(3));
        assert!(Graph::path(3).subdivide(0, 2).is_err());
    }
}
