//! Seeded random graphs for property suites.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::quipu::{ClosedQuipu, OpenQuipu};

/// Random labeled tree: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    Graph::new(n, &edges).expect("tree edges are valid")
}

/// A random tree plus `extra` random new edges; connected by construction.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut g = random_tree(rng, n);
    for _ in 0..extra {
        let missing: Vec<(usize, usize)> =
            (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| !g.has_edge(i, j)).collect();
        let Some(&(i, j)) = missing.choose(rng) else { break };
        g = g.add_edge(i, j).expect("missing edge is new");
    }
    g
}

/// Connected unicyclic graph on `n ≥ 3` vertices.
pub fn random_unicyclic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected(rng, n, 1)
}

/// Open quipu with `r` in `0..=max_r` and segment lengths up to `max_len`.
pub fn random_open_quipu<R: Rng>(rng: &mut R, max_r: usize, max_len: usize) -> OpenQuipu {
    let r = rng.random_range(0..=max_r);
    let ks: Vec<usize> = (0..r + 2).map(|_| rng.random_range(0..=max_len)).collect();
    let ms: Vec<usize> = (0..=r).map(|_| rng.random_range(1..=max_len.max(1))).collect();
    OpenQuipu::of(&ks, &ms)
}

/// Closed quipu with `r` in `1..=max_r` branch points.
pub fn random_closed_quipu<R: Rng>(rng: &mut R, max_r: usize, max_len: usize) -> ClosedQuipu {
    let r = rng.random_range(1..=max_r.max(1));
    loop {
        let ks: Vec<usize> = (0..r).map(|_| rng.random_range(0..=max_len)).collect();
        if ks.iter().sum::<usize>() + r >= 3 {
            let ms: Vec<usize> = (0..r).map(|_| rng.random_range(1..=max_len.max(1))).collect();
            return ClosedQuipu::of(&ks, &ms);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..12 {
            assert!(random_tree(&mut rng, n).is_tree());
            assert!(random_unicyclic(&mut rng, n).is_unicyclic());
            let g = random_connected(&mut rng, n + 1, 2);
            assert!(g.is_connected() && g.size() == n + 2);
        }
        let q = random_closed_quipu(&mut rng, 3, 3);
        assert!(q.realize().is_unicyclic());
    }
}
