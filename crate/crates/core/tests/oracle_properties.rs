use gridtrees::graphs::build_product;
use gridtrees::kirchhoff::spanning_tree_count;
use gridtrees::system::{build_system, SizeLimits};
use gridtrees::{BaseGraph, Topology};
use proptest::prelude::*;

/// Random loopless multigraphs on `1..=max_k` vertices.
fn base_graph(max_k: usize, max_edges: usize) -> impl Strategy<Value = BaseGraph> {
    (1..=max_k).prop_flat_map(move |k| {
        let edge = (1..=k, 1..=k).prop_filter("no loops", |(a, b)| a != b);
        let cap = if k == 1 { 0 } else { max_edges };
        proptest::collection::vec(edge, 0..=cap)
            .prop_map(move |edges| BaseGraph::from_edges(k, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn path_products_match_kirchhoff(base in base_graph(4, 6)) {
        let sys = build_system(&base, Topology::Path, SizeLimits::default()).unwrap();
        for (i, t) in sys.tree_sequence(5).iter().enumerate() {
            let det = spanning_tree_count(&build_product(&base, i + 1, Topology::Path).unwrap());
            prop_assert_eq!(t, &det, "n = {}", i + 1);
        }
    }

    #[test]
    fn cycle_products_match_kirchhoff(base in base_graph(3, 4)) {
        let sys = build_system(&base, Topology::Cycle, SizeLimits::default()).unwrap();
        for (i, t) in sys.tree_sequence(5).iter().enumerate() {
            let det = spanning_tree_count(&build_product(&base, i + 1, Topology::Cycle).unwrap());
            prop_assert_eq!(t, &det, "n = {}", i + 1);
        }
    }

    #[test]
    fn relabelling_the_base_keeps_the_sequence(base in base_graph(4, 5), seed in any::<u64>()) {
        let k = base.k();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut s = seed;
        for i in (1..k).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let other = base.relabel(&perm);
        for topology in [Topology::Path, Topology::Cycle] {
            if topology == Topology::Cycle && k > 3 {
                continue;
            }
            let a = build_system(&base, topology, SizeLimits::default()).unwrap().tree_sequence(4);
            let b = build_system(&other, topology, SizeLimits::default()).unwrap().tree_sequence(4);
            prop_assert_eq!(a, b);
        }
    }
}
