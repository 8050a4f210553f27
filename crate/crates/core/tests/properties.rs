mod common;

use common::*;
use proptest::prelude::*;
use tiwiener::formulas::{wiener_branching, wiener_fusion};
use tiwiener::search::{enumerate_trees, for_each_ti_tree};
use tiwiener::transforms::{fuse, majorize};
use tiwiener::{Error, Tree};

const CASES: u32 = 10_000;

fn tree_strategy(max_n: usize) -> impl Strategy<Value = Tree> {
    (1usize..=max_n).prop_flat_map(|n| {
        let len = n.saturating_sub(2);
        proptest::collection::vec(0..n, len).prop_map(move |seq| prufer_tree(n, &seq))
    })
}

fn rooted_tree(max_n: usize) -> impl Strategy<Value = (Tree, usize)> {
    tree_strategy(max_n).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn transmission_sum_is_twice_wiener(t in tree_strategy(48)) {
        check_identity(&t);
    }

    #[test]
    fn edge_transmission_law(t in tree_strategy(64)) {
        check_edge_law(&t);
    }

    #[test]
    fn path_maximizes_wiener(t in tree_strategy(64)) {
        check_path_bound(&t);
    }

    #[test]
    fn branching_formula_at_any_vertex((t, v) in rooted_tree(64)) {
        let sizes = t.decompose_at(v).unwrap();
        let n = t.order();
        let expected = binom3(n + 1) - {
            // e3 of the component sizes
            let mut e3 = 0i64;
            for i in 0..sizes.len() {
                for j in i + 1..sizes.len() {
                    for k in j + 1..sizes.len() {
                        e3 += (sizes[i] * sizes[j] * sizes[k]) as i64;
                    }
                }
            }
            e3
        };
        // the formula holds only when every branch is a path
        let all_paths = t.neighbors(v).all(|r| t.component(r, v).unwrap().iter().all(|&u| {
            t.neighbors(u).filter(|&w| w != v).count() <= 2
        }) && t.neighbors(r).filter(|&w| w != v).count() <= 1);
        if all_paths {
            prop_assert_eq!(wiener_branching(n, &[sizes]).unwrap(), expected);
            prop_assert_eq!(t.wiener(), expected);
        }
    }

    #[test]
    fn fusion_law((t1, v1) in rooted_tree(32), (t2, v2) in rooted_tree(32)) {
        let fused = fuse(&t1, v1, &t2, v2).unwrap();
        let tr1 = t1.transmissions()[v1];
        let tr2 = t2.transmissions()[v2];
        let (n1, n2) = (t1.order() as i64, t2.order() as i64);
        let predicted = wiener_fusion(t1.wiener(), t2.wiener(), n1, n2, tr1, tr2).unwrap();
        prop_assert_eq!(predicted, oracle_wiener(&fused));
        prop_assert_eq!(fused.order() as i64, n1 + n2 - 1);
    }

    #[test]
    fn straightening_increases_wiener((t, v) in rooted_tree(40), pick in any::<prop::sample::Index>()) {
        let neighbors: Vec<usize> = t.neighbors(v).collect();
        prop_assume!(!neighbors.is_empty());
        check_straighten(&t, v, *pick.get(&neighbors));
    }

    #[test]
    fn majorization_increases_wiener(
        (t, v) in rooted_tree(24),
        a in 1usize..12,
        b in 1usize..12,
        extra in 0usize..6,
    ) {
        let (long, short) = (a.max(b), a.min(b));
        let mut g = hang_path(&t, v, long);
        let long_root = t.order();
        g = hang_path(&g, v, short);
        let short_root = t.order() + long;
        if g.degree(v).unwrap() < 3 {
            g = hang_path(&g, v, extra.max(1));
        }
        let m = majorize(&g, v, long_root, short_root).unwrap();
        prop_assert!(m.wiener() > g.wiener());
        prop_assert_eq!(m.wiener(), oracle_wiener(&m));
        if long != short {
            prop_assert_eq!(
                majorize(&g, v, short_root, long_root),
                Err(Error::LengthOrderViolated { long: short, short: long })
            );
        }
    }

    #[test]
    fn canonical_code_ignores_labels(t in tree_strategy(64), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let perm = random_permutation(&mut rng, t.order());
        let u = t.relabeled(&perm).unwrap();
        prop_assert_eq!(t.canonical_code(), u.canonical_code());
        prop_assert_eq!(t.wiener(), u.wiener());
        let back = t.canonical_code().to_tree();
        prop_assert!(back.is_isomorphic(&t));
        prop_assert_eq!(back.canonical_code(), t.canonical_code());
    }

    #[test]
    fn ti_structure_on_random_trees(t in tree_strategy(40)) {
        check_ti_structure(&t);
    }
}

#[test]
fn exhaustive_small_orders() {
    for n in 1..=12 {
        for t in enumerate_trees(n).unwrap() {
            check_identity(&t);
            check_edge_law(&t);
            check_path_bound(&t);
            check_ti_structure(&t);
            for v in 0..n {
                for r in t.neighbors(v).collect::<Vec<_>>() {
                    check_straighten(&t, v, r);
                }
            }
        }
    }
}

#[test]
fn ti_structure_exhaustive_to_20() {
    let mut seen = 0;
    for n in 1..=20 {
        for_each_ti_tree(n, |t| {
            let p = t.transmission_profile();
            assert!(p.is_ti);
            assert!(t.degree(p.min_vertex).unwrap() >= 3, "order {n}: min vertex degree");
            for v in 0..n {
                let sizes = t.decompose_at(v).unwrap();
                assert!(sizes.windows(2).all(|w| w[0] != w[1]), "order {n}: repeated component size");
            }
            seen += 1;
        })
        .unwrap();
    }
    // 1 + 1 + 6 + 24 + 1 + 82 + 10 + 324 + 47 + 1574 + 165
    assert_eq!(seen, 2235);
}
