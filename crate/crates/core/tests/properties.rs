use edv_core::indices::{index_value, wiener_bruteforce, IndexSpec};
use edv_core::{compare, compare_trees, edge_division_vector, CanonicalCode, OrderRelation, Tree};
use proptest::prelude::*;

/// A random labeled tree of order `n`: vertex `i > 0` attaches to a random
/// earlier vertex, then labels are permuted.
fn tree_of(n: usize) -> impl Strategy<Value = Tree> {
    let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
    (parents, Just((0..n).collect::<Vec<usize>>()).prop_shuffle()).prop_map(move |(parents, perm)| {
        let edges = parents.iter().enumerate().map(|(i, &p)| [perm[i + 1], perm[p]]).collect();
        Tree::new(n, edges).expect("attachment gives a tree")
    })
}

fn arb_tree(max_n: usize) -> impl Strategy<Value = Tree> {
    (1..=max_n).prop_flat_map(tree_of)
}

fn same_order_pair(max_n: usize) -> impl Strategy<Value = (Tree, Tree)> {
    (1..=max_n).prop_flat_map(|n| (tree_of(n), tree_of(n)))
}

fn same_order_triple(max_n: usize) -> impl Strategy<Value = (Tree, Tree, Tree)> {
    (4..=max_n).prop_flat_map(|n| (tree_of(n), tree_of(n), tree_of(n)))
}

fn relabel(t: &Tree, perm: &[usize]) -> Tree {
    Tree::new(t.order(), t.edges().iter().map(|&[u, v]| [perm[u], perm[v]]).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn vector_shape(t in arb_tree(30)) {
        let r = edge_division_vector(&t);
        prop_assert_eq!(r.counts().len(), t.order() / 2);
        prop_assert_eq!(r.counts().iter().sum::<usize>(), t.order() - 1);
    }

    #[test]
    fn invariant_under_relabeling(t in arb_tree(20), seed in any::<u64>()) {
        let n = t.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let u = relabel(&t, &perm);
        prop_assert_eq!(edge_division_vector(&t), edge_division_vector(&u));
        prop_assert_eq!(t.canonical_code(), u.canonical_code());
    }

    #[test]
    fn canonical_code_round_trip(t in arb_tree(25)) {
        let code = t.canonical_code();
        let (parsed, rebuilt) = CanonicalCode::parse(code.as_str()).unwrap();
        prop_assert_eq!(&parsed, &code);
        prop_assert!(rebuilt.is_isomorphic(&t));
    }

    #[test]
    fn star_below_path_above(t in arb_tree(25)) {
        let n = t.order();
        prop_assert!(compare_trees(&Tree::star(n), &t).unwrap().is_le());
        prop_assert!(compare_trees(&t, &Tree::path(n)).unwrap().is_le());
    }

    #[test]
    fn comparison_is_antisymmetric((a, b) in same_order_pair(14)) {
        let ab = compare_trees(&a, &b).unwrap();
        let ba = compare_trees(&b, &a).unwrap();
        prop_assert_eq!(ab.reversed(), ba);
        prop_assert_eq!(
            ab == OrderRelation::Equivalent,
            edge_division_vector(&a) == edge_division_vector(&b)
        );
        prop_assert_eq!(compare_trees(&a, &a).unwrap(), OrderRelation::Equivalent);
    }

    #[test]
    fn comparison_is_transitive((a, b, c) in same_order_triple(10)) {
        let (va, vb, vc) = (edge_division_vector(&a), edge_division_vector(&b), edge_division_vector(&c));
        if compare(&va, &vb).unwrap().is_le() && compare(&vb, &vc).unwrap().is_le() {
            prop_assert!(compare(&va, &vc).unwrap().is_le());
        }
    }

    #[test]
    fn wiener_from_vector_matches_distances(t in arb_tree(25)) {
        let w = index_value(&t, &IndexSpec::Wiener).unwrap();
        prop_assert_eq!(w.as_integer().unwrap().to_string(), wiener_bruteforce(&t).to_string());
    }

    #[test]
    fn order_transfers_to_wiener((a, b) in same_order_pair(14)) {
        if compare_trees(&a, &b).unwrap().is_le() {
            prop_assert!(wiener_bruteforce(&a) <= wiener_bruteforce(&b));
        }
    }
}
