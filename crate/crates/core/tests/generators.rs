use std::collections::BTreeSet;

use quipu_core::canonical_code;
use quipu_core::quipu::{classify, enumerate_quipus, Kinds};
use quipu_core::search::trees::{free_trees, naive_free_trees, naive_unicyclic_graphs, unicyclic_graphs};
use quipu_core::Graph;

// Known counts of free trees (n = 1..16) and connected unicyclic graphs (n = 3..14).
const FREE_TREES: [usize; 16] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];
const UNICYCLIC: [usize; 12] = [1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026, 13999, 39260];

fn distinct(graphs: &[Graph]) -> usize {
    graphs.iter().map(|g| canonical_code(g).unwrap()).collect::<BTreeSet<_>>().len()
}

#[test]
fn free_tree_counts() {
    for (i, &want) in FREE_TREES.iter().enumerate() {
        let trees = free_trees(i + 1);
        assert_eq!(trees.len(), want, "n = {}", i + 1);
        assert!(trees.iter().all(|t| t.is_tree() && t.order() == i + 1));
    }
    assert_eq!(distinct(&free_trees(12)), FREE_TREES[11]);
}

#[test]
fn unicyclic_counts() {
    for (i, &want) in UNICYCLIC.iter().enumerate() {
        let n = i + 3;
        let graphs = unicyclic_graphs(n);
        assert_eq!(graphs.len(), want, "n = {n}");
        assert!(graphs.iter().all(|g| g.is_unicyclic() && g.is_connected() && g.order() == n));
    }
    assert_eq!(distinct(&unicyclic_graphs(11)), UNICYCLIC[8]);
}

#[test]
fn catalogue_matches_naive_growth() {
    for n in 1..=10 {
        let codes = |gs: Vec<Graph>| gs.iter().map(|g| canonical_code(g).unwrap()).collect::<BTreeSet<_>>();
        assert_eq!(codes(free_trees(n)), codes(naive_free_trees(n).unwrap()), "trees n = {n}");
        if n >= 3 {
            assert_eq!(codes(unicyclic_graphs(n)), codes(naive_unicyclic_graphs(n).unwrap()), "unicyclic n = {n}");
        }
    }
    assert!(naive_free_trees(11).is_none());
}

#[test]
fn enumerated_quipus_match_classified_sparse_graphs() {
    for (n, d) in [(7, 4), (9, 5), (10, 6), (11, 6)] {
        let enumerated: BTreeSet<_> = enumerate_quipus(n, d, Kinds::ALL)
            .iter()
            .map(|s| canonical_code(&s.realize()).unwrap())
            .collect();
        let mut graphs = free_trees(n);
        graphs.extend(unicyclic_graphs(n));
        let classified: BTreeSet<_> = graphs
            .iter()
            .filter(|g| g.diameter().ok().and_then(|x| x.finite()) == Some(d) && classify(g).is_some())
            .map(|g| canonical_code(g).unwrap())
            .collect();
        assert_eq!(enumerated, classified, "({n}, {d})");
    }
}
