//! Property tests against the brute-force oracles.

use std::sync::OnceLock;

use proptest::prelude::*;

use polyrad::canon::canonical_code;
use polyrad::generator::{enumerate_by_size, FilterSet};
use polyrad::invariants::{diameter, radius};
use polyrad::io::{graph6, planar_code};
use polyrad::structure::{is_planar, vertex_connectivity_at_least, Planarity};
use polyrad::{oracle, EmbeddedGraph, Graph};

fn polytopes() -> &'static [EmbeddedGraph] {
    static ALL: OnceLock<Vec<EmbeddedGraph>> = OnceLock::new();
    ALL.get_or_init(|| {
        let levels = enumerate_by_size(14, FilterSet::none()).unwrap();
        levels.iter().flat_map(|l| l.graphs()).collect()
    })
}

fn polytope() -> impl Strategy<Value = EmbeddedGraph> {
    (0..polytopes().len()).prop_map(|i| polytopes()[i].clone())
}

fn relabelled_polytope() -> impl Strategy<Value = (EmbeddedGraph, Vec<usize>)> {
    polytope().prop_flat_map(|eg| {
        let perm = Just((0..eg.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(eg), perm)
    })
}

/// Random simple graph on 2..=9 vertices (not necessarily connected).
fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn code_ignores_labels_and_mirroring((eg, perm) in relabelled_polytope()) {
        let code = canonical_code(&eg);
        prop_assert_eq!(&canonical_code(&eg.relabel(&perm).unwrap()), &code);
        prop_assert_eq!(&canonical_code(&eg.mirror()), &code);
    }

    #[test]
    fn planar_code_round_trip((eg, perm) in relabelled_polytope()) {
        let shuffled = eg.relabel(&perm).unwrap();
        let bytes = planar_code::encode([&shuffled]).unwrap();
        let back = planar_code::decode(&bytes).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back[0].graph(), shuffled.graph());
        prop_assert_eq!(back[0].rotations(), shuffled.rotations());
    }

    #[test]
    fn dual_is_an_involution(eg in polytope()) {
        let d = eg.dual().unwrap();
        prop_assert_eq!(d.order(), eg.face_count());
        prop_assert_eq!(d.size(), eg.size());
        prop_assert_eq!(canonical_code(&d.dual().unwrap()), canonical_code(&eg));
    }

    #[test]
    fn eccentricity_sweep_matches_floyd_warshall(g in small_graph()) {
        prop_assert_eq!(radius(&g).ok(), oracle::radius(&g));
        prop_assert_eq!(diameter(&g).ok(), oracle::diameter(&g));
    }

    #[test]
    fn flow_connectivity_matches_subset_removal(g in small_graph(), k in 1usize..=3) {
        prop_assume!(g.order() > k);
        prop_assert_eq!(vertex_connectivity_at_least(&g, k).unwrap(), oracle::vertex_connectivity_at_least(&g, k));
    }

    #[test]
    fn planarity_certificates_check_out(g in small_graph()) {
        match is_planar(&g) {
            Planarity::Planar(eg) => {
                prop_assert_eq!(eg.graph(), &g);
                // Faces are traced per component: 2 for each component with
                // edges, 1 for an isolated vertex.
                let d = oracle::distance_matrix(&g);
                let expected: isize = (0..g.order())
                    .filter(|&v| (0..v).all(|u| d[u][v].is_none()))
                    .map(|v| if g.degree(v) == 0 { 1 } else { 2 })
                    .sum();
                prop_assert_eq!(eg.euler_characteristic(), expected);
            }
            Planarity::NonPlanar(w) => prop_assert!(w.verify(&g)),
        }
    }

    #[test]
    fn graph6_round_trip(g in small_graph()) {
        let line = graph6::encode_graph6(&g).unwrap();
        prop_assert_eq!(graph6::decode_graph6(&line).unwrap(), g);
    }
}
