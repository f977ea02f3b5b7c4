mod common;

use std::sync::Arc;

use bmgedit::oracle::exact_edit;
use bmgedit::rng::stream;
use bmgedit::simulation::{perturb, random_binary_colored_tree, random_colored_tree, PerturbationSpec};
use bmgedit::{
    aho_graph, bpmf_tree, edit_binary, edit_general, edit_simple, edit_with_method, general_builder,
    informative_triples, is_binary_explainable, is_bmg, lrt, rebuild_for, replay_tree, u_star, Labels, Method,
    Triple, TripleSet, Variant,
};
use proptest::prelude::*;

fn six_leaves() -> Arc<Labels> {
    Arc::new(
        Labels::new([
            ("a", "A"),
            ("b1", "B"),
            ("b2", "B"),
            ("c1", "C"),
            ("c2", "C"),
            ("c3", "C"),
        ])
        .unwrap(),
    )
}

fn six_leaf_triples(labels: &Labels) -> TripleSet {
    let v = |s: &str| labels.vertex(s).unwrap();
    [
        ("a", "b1", "b2"),
        ("a", "c1", "c2"),
        ("a", "c1", "c3"),
        ("b1", "c1", "c2"),
        ("b1", "c1", "c3"),
        ("b2", "c1", "c2"),
        ("b2", "c1", "c3"),
        ("c1", "b2", "b1"),
    ]
    .into_iter()
    .map(|(x, y, z)| Triple::new(v(x), v(y), v(z)))
    .collect()
}

#[test]
fn six_leaf_aho_graph_components() {
    let labels = six_leaves();
    let r = six_leaf_triples(&labels);
    let all: Vec<usize> = (0..6).collect();
    let mut edges = aho_graph(&r, &all);
    edges.sort();
    let v = |s: &str| labels.vertex(s).unwrap();
    let mut expected = vec![(v("a"), v("b1")), (v("a"), v("c1")), (v("b1"), v("c1")), (v("b2"), v("c1"))];
    expected.sort();
    assert_eq!(edges, expected);
}

#[test]
fn bpmf_can_miss_a_consistent_triple() {
    let labels = six_leaves();
    let r = six_leaf_triples(&labels);
    let v = |s: &str| labels.vertex(s).unwrap();
    let ab1_b2 = Triple::new(v("a"), v("b1"), v("b2"));
    let all: Vec<usize> = (0..6).collect();
    let mut missed = false;
    for seed in 0..32 {
        let t = bpmf_tree(&r, &all, &labels, &mut stream(seed)).unwrap();
        assert!(t.is_binary());
        if !t.displays_triple(&ab1_b2).unwrap() {
            missed = true;
            assert!(t.bmg().has_arc(v("a"), v("b2")));
        }
    }
    assert!(missed);
}

#[test]
fn exact_optimum_bounds_every_heuristic() {
    let mut rng = stream(7);
    for i in 0..40 {
        let g = common::small_graph(&mut rng);
        let (_, opt) = exact_edit(&g).unwrap();
        assert!(opt >= u_star(&g).len(), "graph {i}");
        for m in Method::ALL {
            let r = edit_with_method(&g, m, 3, false, &mut stream(i)).unwrap();
            assert!(r.cost() >= opt, "graph {i} {m}: {} < {opt}", r.cost());
        }
        let s = edit_simple(&g, general_builder(Method::MinCut.strategy().unwrap(), 3, &mut stream(i))).unwrap();
        assert!(s.cost() >= opt);
    }
}

#[test]
fn replay_of_least_resolved_tree_is_free() {
    let mut rng = stream(3);
    for _ in 0..30 {
        let t = random_colored_tree(15, 4, &mut rng).unwrap();
        let g = t.bmg();
        let lrt = lrt(&g).unwrap();
        let r = replay_tree(&g, &lrt, Variant::General).unwrap();
        assert!(r.edits.is_empty());
        assert!(r.step_costs.iter().all(|&(_, c)| c == 0));
    }
}

#[test]
fn perturbed_bmgs_are_repaired() {
    let spec = PerturbationSpec::new(0.1, 0.1).unwrap();
    let mut rng = stream(21);
    for i in 0..10 {
        let t = random_binary_colored_tree(20, 5, &mut rng).unwrap();
        let g = perturb(&t.bmg(), &spec, &mut rng).unwrap();
        for m in Method::ALL {
            let direct = edit_with_method(&g, m, 3, true, &mut stream(i)).unwrap();
            assert!(is_binary_explainable(&direct.edited), "{m}");
            let rebuilt = rebuild_for(&g, &direct.tree, true).unwrap();
            assert!(is_binary_explainable(&rebuilt), "{m}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn general_editing_yields_consistent_records(seed in any::<u64>(), n in 2usize..12, density in 0.05f64..0.95) {
        let mut rng = stream(seed);
        let l = 2 + (seed as usize % (n - 1).min(4));
        let g = common::random_graph(&mut rng, n, l.min(n), density);
        let lower = u_star(&g);
        for m in Method::PARTITIONING {
            let r = edit_general(&g, m.strategy().unwrap(), 2, &mut stream(seed ^ 1)).unwrap();
            prop_assert!(is_bmg(&r.edited));
            prop_assert_eq!(&r.tree.bmg(), &r.edited);
            prop_assert_eq!(r.cost(), r.step_cost_sum());
            prop_assert_eq!(r.step_costs.len(), r.tree.inner_nodes().count());
            prop_assert!(lower.is_subset(&r.edits));
        }
    }

    #[test]
    fn binary_editing_is_binary_explainable(seed in any::<u64>(), n in 2usize..12, density in 0.05f64..0.95) {
        let mut rng = stream(seed);
        let g = common::random_graph(&mut rng, n, 2.min(n), density);
        for m in Method::PARTITIONING {
            let r = edit_binary(&g, m.strategy().unwrap(), 2, &mut stream(seed)).unwrap();
            prop_assert!(r.tree.is_binary());
            prop_assert!(is_binary_explainable(&r.edited));
            prop_assert_eq!(r.cost(), r.step_cost_sum());
        }
    }

    #[test]
    fn bmg_inputs_are_fixed_points(seed in any::<u64>(), n in 1usize..25, l in 1usize..6) {
        let mut rng = stream(seed);
        let t = random_colored_tree(n, l.min(n), &mut rng).unwrap();
        let g = t.bmg();
        prop_assert!(is_bmg(&g));
        for m in Method::ALL {
            let r = edit_with_method(&g, m, 2, false, &mut stream(seed)).unwrap();
            prop_assert!(is_bmg(&r.edited));
            if m != Method::Bpmf {
                prop_assert!(r.edits.is_empty(), "{}", m);
            }
        }
        prop_assert_eq!(lrt(&g).unwrap().bmg(), g.clone());
        for x in informative_triples(&g).unwrap().iter() {
            prop_assert!(t.displays_triple(x).unwrap());
        }
    }
}
