//! Labeled-graph enumeration for very small orders.

use std::collections::BTreeMap;

use crate::canon::canonical_code;
use crate::exec::Exec;
use crate::graph::Graph;

pub const ALL_GRAPHS_MAX_ORDER: usize = 7;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Diameter of the labeled graph `mask` on `n ≤ 8` vertices, `None` if disconnected.
fn mask_diameter(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Option<usize> {
    let mut adj = [0u8; 8];
    for (bit, &(i, j)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let full: u8 = if n == 8 { u8::MAX } else { (1u8 << n) - 1 };
    let mut diam = 0;
    for s in 0..n {
        let mut seen = 1u8 << s;
        let mut frontier = seen;
        let mut ecc = 0;
        while seen != full {
            let mut next = 0u8;
            for (v, row) in adj.iter().enumerate().take(n) {
                if frontier >> v & 1 == 1 {
                    next |= row;
                }
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            frontier = next;
            ecc += 1;
        }
        diam = diam.max(ecc);
    }
    Some(diam)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with diameter `d`, together with the number of labeled graphs
/// scanned. Representatives are ordered by canonical code.
pub fn connected_with_diameter(n: usize, d: usize, exec: Exec) -> Option<(Vec<Graph>, u64)> {
    if n == 0 || n > ALL_GRAPHS_MAX_ORDER {
        return None;
    }
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    let hits = exec.filter_map_range(0..total, |mask| {
        if mask_diameter(n, mask, &pairs) != Some(d) {
            return None;
        }
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::new(n, &edges).expect("mask edges are valid");
        let code = canonical_code(&g).expect("small graphs always have codes");
        Some((code, g))
    });
    let mut classes = BTreeMap::new();
    for (code, g) in hits {
        classes.entry(code).or_insert(g);
    }
    Some((classes.into_values().collect(), total))
}
