mod common;

use colorconn::oracles::{extremal_cck_colorings, h_value, solve_cck, solve_cfc};
use colorconn::{color_classes, Graph};
use proptest::prelude::*;

fn is_path(t: &Graph) -> bool {
    (0..t.n()).all(|v| t.degree(v) <= 2)
}

/// A spanning tree of `g` by depth-first search from vertex 0.
fn spanning_tree(g: &Graph) -> Graph {
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::new();
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                edges.push((v, w));
                stack.push(w);
            }
        }
    }
    Graph::from_indices(g.labels().to_vec(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cfc_lies_within_one_of_h(g in common::connected(7, 9)) {
        let h = h_value(&g).unwrap();
        prop_assume!(!h.no_cut_edges);
        let cfc = solve_cfc(&g).unwrap().value;
        prop_assert!(h.value <= cfc && cfc <= h.value + 1, "h={} cfc={}", h.value, cfc);
    }

    #[test]
    fn tree_waste_bound(t in common::tree(8), k in 1usize..8) {
        let n = t.n();
        prop_assume!(k < n);
        let w = t.m() - solve_cck(&t, k).unwrap().value;
        prop_assert!(w <= n - 1 - k);
        // Every tree meets the bound at k = 1 and at k = n - 1.
        if (2..n - 1).contains(&k) {
            prop_assert_eq!(w == n - 1 - k, is_path(&t));
        }
    }

    #[test]
    fn cck_grows_with_k(g in common::connected(6, 9), k in 1usize..5) {
        prop_assert!(solve_cck(&g, k).unwrap().value <= solve_cck(&g, k + 1).unwrap().value);
    }

    #[test]
    fn spanning_subgraph_bound(g in common::connected(6, 9), k in 1usize..4) {
        let h = spanning_tree(&g);
        let big = solve_cck(&g, k).unwrap().value;
        let small = solve_cck(&h, k).unwrap().value;
        prop_assert!(big >= small + g.m() - h.m());
    }

    #[test]
    fn extremal_colorings_waste_around_missing_neighbors(g in common::connected(7, 9)) {
        let complement = g.complement();
        let extremal = extremal_cck_colorings(&g, 1).unwrap();
        prop_assert!(!extremal.colorings.is_empty());
        for f in &extremal.colorings {
            let view = color_classes(&g, f).unwrap();
            for w in 0..g.n() {
                let p = complement.degree(w);
                let mut total = 0;
                for class in &view.classes {
                    for comp in &class.components {
                        if comp.binary_search(&w).is_ok() {
                            let edges = class
                                .edges
                                .iter()
                                .filter(|&&e| comp.binary_search(&g.edge(e).0).is_ok())
                                .count();
                            total += edges - 1;
                        }
                    }
                }
                prop_assert!(total >= p, "vertex {} wastes {} < {}", w, total, p);
            }
        }
    }
}
