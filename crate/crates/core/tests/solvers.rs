use oidom::solvers::{check_set, solve, solve_naive, value, ParamKind, ParamResult};
use oidom::Graph;
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        let mask = if bits == 0 {
            Just(0u64).boxed()
        } else {
            (0..(1u64 << bits)).boxed()
        };
        mask.prop_map(move |m| Graph::from_edge_mask(n, m))
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    small_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn matches_exhaustive_solver(g in small_graph(8)) {
        for kind in ParamKind::ALL {
            let fast = solve(&g, kind);
            let naive = solve_naive(&g, kind).unwrap();
            prop_assert_eq!(fast, naive, "{:?} on {:?}", kind, g.edges());
            prop_assert_eq!(value(&g, kind), naive.value());
        }
    }

    #[test]
    fn certificates_are_valid(g in small_graph(11)) {
        for kind in ParamKind::ALL {
            if let ParamResult::Defined { value, certificate } = solve(&g, kind) {
                prop_assert!(check_set(&g, certificate, kind));
                prop_assert_eq!(certificate.len(), value);
            }
        }
    }

    #[test]
    fn relabeling_preserves_values((g, perm) in with_permutation(10)) {
        let h = g.permute(&perm);
        for kind in ParamKind::ALL {
            prop_assert_eq!(value(&g, kind), value(&h, kind));
        }
    }

    #[test]
    fn order_relations(g in small_graph(10)) {
        let n = g.order();
        let m = g.size();
        let alpha = value(&g, ParamKind::Alpha).unwrap();
        let two = value(&g, ParamKind::TwoOid).unwrap();
        // Outer independence bounds every parameter below by n - α.
        prop_assert!(two + alpha >= n);
        prop_assert!(2 * two + m >= 2 * n);
        if n > 0 && g.min_degree() >= 2 {
            prop_assert_eq!(two + alpha, n);
        }
        if !g.has_isolated_vertex() {
            let t = value(&g, ParamKind::Toid).unwrap();
            let d = value(&g, ParamKind::Doid).unwrap();
            prop_assert!(t + alpha >= n);
            prop_assert!(d >= t && d >= two);
            prop_assert!(t >= value(&g, ParamKind::GammaT).unwrap());
            prop_assert!(d >= value(&g, ParamKind::GammaX2).unwrap());
        }
    }
}
