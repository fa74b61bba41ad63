use proptest::prelude::*;
use quipu_core::charpoly::charpoly_recursive;
use quipu_core::poly::rational_to_f64;
use quipu_core::quipu::{classify, QuipuSpec};
use quipu_core::random::{random_closed_quipu, random_connected, random_open_quipu, random_tree, random_unicyclic};
use quipu_core::root::comparison_width;
use quipu_core::{canonical_code, charpoly_dense, graph6, rho, rho_float, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sparse_graph(seed: u64, n: usize, cyclic: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if cyclic {
        random_unicyclic(&mut rng, n.max(3))
    } else {
        random_tree(&mut rng, n)
    }
}

fn any_graph(seed: u64, n: usize, extra: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extra = extra.min(n * (n - 1) / 2 - (n - 1));
    random_connected(&mut rng, n, extra)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_matches_dense(seed: u64, n in 1usize..16, cyclic: bool) {
        let g = sparse_graph(seed, n, cyclic);
        prop_assert_eq!(charpoly_recursive(&g).unwrap(), charpoly_dense(&g));
    }

    #[test]
    fn graph6_round_trip(seed: u64, n in 1usize..30, extra in 0usize..8) {
        let g = any_graph(seed, n, extra);
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap().edges(), g.edges());
    }

    #[test]
    fn canonical_code_ignores_labels(seed: u64, n in 1usize..14, cyclic: bool, perm_seed: u64) {
        let g = sparse_graph(seed, n, cyclic);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn generic_code_ignores_labels(seed: u64, n in 3usize..9, extra in 2usize..6, perm_seed: u64) {
        let g = any_graph(seed, n, extra);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn spec_literals_round_trip(seed: u64, closed: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = if closed {
            QuipuSpec::Closed(random_closed_quipu(&mut rng, 4, 5))
        } else {
            QuipuSpec::Open(random_open_quipu(&mut rng, 4, 5))
        };
        let parsed: QuipuSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &spec);
        let canon = spec.canonicalize();
        prop_assert_eq!(canon.canonicalize(), canon.clone());
        let g = spec.realize();
        let found = classify(&g).expect("a realized quipu classifies");
        prop_assert_eq!(canonical_code(&found.realize()).unwrap(), canonical_code(&g).unwrap());
    }

    #[test]
    fn float_bracket_contains_certified_root(seed: u64, n in 2usize..20, extra in 0usize..4) {
        let g = any_graph(seed, n, extra);
        let b = rho_float(&g);
        let r = rho(&g, &comparison_width());
        prop_assert!(b.lo <= rational_to_f64(&r.hi()) && rational_to_f64(&r.lo()) <= b.hi);
    }
}
