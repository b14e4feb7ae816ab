mod common;

use combclass::halin::{
    fan_cycle_for_h, halin_for_fat, halin_from_fan_cycle, verify_fan_cycle_system, verify_halin,
    HalinCandidate, HalinReason,
};
use combclass::structures::{build_fat, build_h, CombDescription, FatDescription, HExpansion};
use combclass::{Error, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

use common::{all_h, dfs_leaf_order, is_planar, union_graph};

fn candidate_graph(h: &HalinCandidate, n: usize) -> Graph {
    union_graph(n, &h.tree_edges, &h.cycle)
}

/// Host contains every tree and cycle edge of the candidate.
fn inside(g: &Graph, h: &HalinCandidate) -> bool {
    let k = h.cycle.len();
    h.tree_edges.iter().all(|&(u, v)| g.has_edge(u, v))
        && (0..k).all(|i| g.has_edge(h.cycle[i], h.cycle[(i + 1) % k]))
}

#[test]
fn random_fan_cycle_systems_give_halin_subgraphs() {
    let mut rng = common::rng(3);
    let mut planar_checked = 0;
    for _ in 0..500 {
        let (g, f) = common::random_fan_cycle_system(&mut rng);
        assert_eq!(verify_fan_cycle_system(&g, &f), Ok(()));
        let h = halin_from_fan_cycle(&g, &f).unwrap();
        assert_eq!(verify_halin(&g, &h), Ok(()), "{f:?}");
        assert!(inside(&g, &h));
        assert_eq!(h.cycle, f.cycle);
        if g.order() <= 11 {
            assert!(is_planar(&candidate_graph(&h, g.order())));
            planar_checked += 1;
        }
    }
    assert!(planar_checked > 100);
}

#[test]
fn random_3connected_fat_structures() {
    let mut rng = common::rng(5);
    for _ in 0..200 {
        let d = common::random_3connected_fat(&mut rng, 5..=8, 4);
        let g = build_fat(&d).unwrap();
        assert!(g.vertex_connectivity().unwrap() >= 3, "{d:?}");
        let h = halin_for_fat(&d).unwrap_or_else(|e| panic!("{d:?}: {e}"));
        assert_eq!(verify_halin(&g, &h), Ok(()), "{d:?}");
        assert!(inside(&g, &h));
        if g.order() <= 11 {
            assert!(is_planar(&candidate_graph(&h, g.order())));
        }
    }
}

#[test]
fn fat_examples() {
    for d in [
        FatDescription::path(vec![1, 3, 3, 3, 1]).unwrap(),
        FatDescription::cycle(vec![1, 2, 2, 2, 2, 2]).unwrap(),
    ] {
        let h = halin_for_fat(&d).unwrap();
        assert_eq!(verify_halin(&build_fat(&d).unwrap(), &h), Ok(()));
    }
    let d = FatDescription::path(vec![1, 2, 3, 3, 1]).unwrap();
    assert!(build_fat(&d).unwrap().vertex_connectivity().unwrap() < 3);
    assert!(matches!(halin_for_fat(&d), Err(Error::Precondition(_))));
}

#[test]
fn h_families_with_three_connected_members() {
    let mut per_index = [0usize; 9];
    let large_combs = [(9, vec![3, 3, 3]), (10, vec![3, 3, 3]), (11, vec![3, 4, 4]), (13, vec![3, 3, 3, 3])]
        .into_iter()
        .map(|(c, r)| HExpansion::Comb {
            comb: CombDescription::pointed(c, r).unwrap(),
        });
    for e in all_h(12).into_iter().chain(large_combs) {
        let g = build_h(&e).unwrap();
        let k = g.vertex_connectivity().unwrap();
        match e.index() {
            2 | 3 | 5 | 6 => {
                if g.order() <= 10 {
                    assert!(k <= 2, "{e:?}");
                }
                assert!(matches!(fan_cycle_for_h(&g, &e), Err(Error::Precondition(_))));
            }
            i => {
                if k < 3 {
                    assert!(matches!(fan_cycle_for_h(&g, &e), Err(Error::Precondition(_))));
                    continue;
                }
                let f = fan_cycle_for_h(&g, &e).unwrap_or_else(|err| panic!("{e:?}: {err}"));
                assert_eq!(verify_fan_cycle_system(&g, &f), Ok(()));
                let h = halin_from_fan_cycle(&g, &f).unwrap();
                assert_eq!(verify_halin(&g, &h), Ok(()));
                if g.order() <= 11 {
                    assert!(is_planar(&candidate_graph(&h, g.order())));
                }
                per_index[i] += 1;
            }
        }
    }
    for i in [0, 1, 4] {
        assert!(per_index[i] >= 3, "H{i}: {}", per_index[i]);
    }
    assert_eq!(per_index[7], 1);
    assert_eq!(per_index[8], 1);
}

#[test]
fn h1_case_with_two_large_cliques() {
    let e = HExpansion::Expanded {
        index: 1,
        cliques: vec![3, 3, 1],
    };
    let g = build_h(&e).unwrap();
    let f = fan_cycle_for_h(&g, &e).unwrap();
    assert_eq!(f.paths.len(), 1);
    assert_eq!(f.paths[0].len(), 3);
}

#[test]
fn contiguity_agrees_with_kuratowski() {
    let mut rng = common::rng(7);
    let (mut yes, mut no) = (0, 0);
    for round in 0..400 {
        let (tree, mut leaves) = common::random_reduced_tree(&mut rng, 11);
        let n = tree.len() + 1;
        if round % 2 == 0 {
            leaves = dfs_leaf_order(n, &tree);
            let s = rng.gen_range(0..leaves.len());
            leaves.rotate_left(s);
        } else {
            leaves.shuffle(&mut rng);
        }
        let g = union_graph(n, &tree, &leaves);
        let h = HalinCandidate {
            tree_edges: tree,
            cycle: leaves,
        };
        let verdict = verify_halin(&g, &h);
        if let Err(v) = &verdict {
            assert_eq!(v.reason, HalinReason::NotContiguous);
        }
        let planar = is_planar(&g);
        assert_eq!(verdict.is_ok(), planar, "{h:?}");
        if planar {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 50 && no > 50, "{yes} {no}");
}
