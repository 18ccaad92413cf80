mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use tsubdiv::format::{read_embedding, read_tournament, write_embedding, write_tournament};
use tsubdiv::generators::random_tournament;
use tsubdiv::{ball, build_aux_graph, connect_pairs, find_hk, p2, verify_embedding, FinderConfig, Tournament};

fn tournament(max_n: usize) -> impl Strategy<Value = Tournament> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_tournament(n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn p2_difference_is_degree_difference(t in tournament(80)) {
        let n = t.n();
        for u in 0..n {
            for v in 0..n {
                let lhs = p2(&t, u, v).unwrap() as i64 - p2(&t, v, u).unwrap() as i64;
                prop_assert_eq!(lhs, t.out_degree(u) as i64 - t.out_degree(v) as i64);
            }
        }
    }

    #[test]
    fn p2_triangle_inequality(t in tournament(25)) {
        let n = t.n();
        let m: Vec<Vec<usize>> = (0..n).map(|u| (0..n).map(|v| p2(&t, u, v).unwrap()).collect()).collect();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    prop_assert!(m[u][v] <= m[u][w] + m[w][v]);
                }
            }
        }
    }

    #[test]
    fn tournament_file_round_trip(t in tournament(70)) {
        let text = write_tournament(&t);
        prop_assert_eq!(read_tournament(&text).unwrap(), t);
    }

    #[test]
    fn balls_grow_monotonically(t in tournament(60), threshold in 0usize..40, v in 0usize..60, r in 0usize..6) {
        let verts: Vec<usize> = (0..t.n()).collect();
        let g = build_aux_graph(&t, &verts, threshold).unwrap();
        let v = v % t.n();
        let inner: BTreeSet<usize> = ball(&g, v, r).unwrap().into_iter().collect();
        let outer: BTreeSet<usize> = ball(&g, v, r + 1).unwrap().into_iter().collect();
        prop_assert!(inner.contains(&v));
        prop_assert!(inner.is_subset(&outer));
        // Every new vertex is adjacent to something already inside.
        for w in outer.difference(&inner) {
            prop_assert!(inner.iter().any(|&x| g.has_edge(x, *w)));
        }
    }

    #[test]
    fn connector_is_complete_and_sound(
        seed in any::<u64>(),
        n in 3usize..16,
        raw in prop::collection::vec((0usize..16, 0usize..16), 1..8),
        blocked in prop::collection::btree_set(0usize..16, 0..4),
    ) {
        let t = random_tournament(n, seed).unwrap();
        let demands: Vec<(usize, usize)> = raw
            .into_iter()
            .map(|(u, v)| (u % n, v % n))
            .filter(|(u, v)| u != v)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let forbidden: BTreeSet<usize> = blocked.into_iter().filter(|&v| v < n).collect();
        let brute = common::brute_connect(&t, &demands, &forbidden);
        match connect_pairs(&t, &demands, &common::to_set(n, &forbidden)) {
            Ok(a) => {
                prop_assert!(brute.is_some());
                let mids: BTreeSet<usize> = a.values().copied().collect();
                prop_assert_eq!(mids.len(), demands.len());
                for &(u, v) in &demands {
                    let m = a[&(u, v)];
                    prop_assert!(t.has_arc(u, m) && t.has_arc(m, v) && !forbidden.contains(&m));
                }
            }
            Err(_) => prop_assert!(brute.is_none()),
        }
    }

    #[test]
    fn found_embeddings_verify_and_round_trip(t in tournament(40), k in 1usize..5) {
        if let Ok(e) = find_hk(&t, k, &FinderConfig::practical()) {
            prop_assert!(verify_embedding(&t, &e).is_empty());
            prop_assert_eq!(read_embedding(&write_embedding(&e)).unwrap(), e);
        }
    }
}
