use oidom::families::{generate, in_gcal, in_lambda, in_omega, in_phi, in_psi, in_theta, FamilySpec};
use oidom::solvers::{value, ParamKind};
use oidom::Graph;
use proptest::prelude::*;

fn relabel(g: &Graph, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    g.permute(&perm)
}

fn v(g: &Graph, kind: ParamKind) -> usize {
    value(g, kind).expect("defined")
}

fn lambda() -> impl Strategy<Value = FamilySpec> {
    (1..4usize, 1..4usize, 1..4usize).prop_map(|(a, b, c)| FamilySpec::Lambda { a, b, c })
}

fn phi() -> impl Strategy<Value = FamilySpec> {
    (5..11usize, any::<u64>()).prop_flat_map(|(n, seed)| {
        (3..=n - 2).prop_map(move |p| FamilySpec::Phi {
            n,
            p,
            seed,
            cross_edges: None,
        })
    })
}

fn psi() -> impl Strategy<Value = FamilySpec> {
    (10..13usize, any::<u64>()).prop_map(|(n, seed)| FamilySpec::Psi {
        n,
        seed,
        cross_edges: None,
    })
}

fn omega() -> impl Strategy<Value = FamilySpec> {
    (
        0..3usize,
        0..4usize,
        2..5usize,
        0..5usize,
        prop::collection::vec(0..3usize, 3),
        any::<u64>(),
    )
        .prop_map(|(a, b, r, p, leaves, seed)| FamilySpec::Omega {
            a,
            b,
            r,
            p,
            leaves: leaves[..b.min(3)].to_vec(),
            seed,
            attachments: None,
        })
        .prop_filter_map("valid and within the recognizer cap", |spec| {
            generate(&spec).ok().filter(|g| g.order() <= 16).map(|_| spec)
        })
}

fn gcal() -> impl Strategy<Value = FamilySpec> {
    (1..6usize, 2..6usize, any::<u64>()).prop_map(|(p, q, seed)| FamilySpec::Gcal {
        p,
        q,
        seed,
        pairs: None,
    })
}

fn theta() -> impl Strategy<Value = FamilySpec> {
    (3..9usize).prop_flat_map(|q| (0..q).prop_map(move |m| FamilySpec::Theta { q, missing: Some(m) }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_members(spec in lambda(), seed in any::<u64>()) {
        let g = generate(&spec).unwrap();
        let n = g.order();
        prop_assert!(in_lambda(&g));
        prop_assert!(in_lambda(&relabel(&g, seed)));
        prop_assert_eq!(v(&g, ParamKind::Toid) * v(&g.complement(), ParamKind::Toid), 2 * n - 6);
    }

    #[test]
    fn phi_members(spec in phi(), seed in any::<u64>()) {
        let g = generate(&spec).unwrap();
        let n = g.order();
        prop_assert!(in_phi(&g));
        prop_assert!(in_phi(&g.complement()));
        prop_assert!(in_phi(&relabel(&g, seed)));
        prop_assert_eq!(v(&g, ParamKind::Toid) + v(&g.complement(), ParamKind::Toid), n - 1);
    }

    #[test]
    fn psi_members(spec in psi(), seed in any::<u64>()) {
        let g = generate(&spec).unwrap();
        let n = g.order();
        prop_assert!(in_psi(&g));
        prop_assert!(in_psi(&relabel(&g, seed)));
        prop_assert_eq!(v(&g, ParamKind::TwoOid) * v(&g.complement(), ParamKind::TwoOid), 3 * n - 12);
    }

    #[test]
    fn omega_members(spec in omega(), seed in any::<u64>()) {
        let g = generate(&spec).unwrap();
        prop_assert!(in_omega(&g).unwrap());
        prop_assert!(in_omega(&relabel(&g, seed)).unwrap());
        let p = g.degree_profile();
        let ds = p.delta_star;
        let lhs = v(&g, ParamKind::Doid) * (2 * ds - 1);
        let rhs = 2 * ds * g.order() + p.leaves.len() - 2 * g.size() - p.supports.len();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcal_members(spec in gcal(), seed in any::<u64>()) {
        let g = generate(&spec).unwrap();
        prop_assert!(in_gcal(&g));
        prop_assert!(in_gcal(&relabel(&g, seed)));
        prop_assert_eq!(2 * v(&g, ParamKind::TwoOid) + g.size(), 2 * g.order());
    }

    #[test]
    fn theta_members(spec in theta(), seed in any::<u64>()) {
        let g = generate(&spec).unwrap();
        let n = g.order();
        prop_assert!(in_theta(&g));
        prop_assert!(in_theta(&relabel(&g, seed)));
        prop_assert_eq!(v(&g, ParamKind::Doid) + v(&g.complement(), ParamKind::Doid), 2 * n - 1);
    }

    #[test]
    fn generation_is_reproducible(spec in prop_oneof![phi(), psi(), omega(), gcal()]) {
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }
}
