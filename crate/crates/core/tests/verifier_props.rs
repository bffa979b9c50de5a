mod common;

use colorconn::oracles::paths::{distinct_colors, is_monochromatic, is_proper, singleton_colors};
use colorconn::verifiers::{
    color_diameter, color_distance, conflict_free_connected, is_k_color_connection,
    monochromatic_connected, properly_connected, PathProperty, Verdict,
};
use colorconn::{EdgeColoring, Graph};
use proptest::prelude::*;

fn all_verdicts(g: &Graph, f: &EdgeColoring) -> [Verdict; 3] {
    [
        monochromatic_connected(g, f).unwrap(),
        properly_connected(g, f).unwrap(),
        conflict_free_connected(g, f).unwrap(),
    ]
}

const PROPERTIES: [PathProperty; 3] = [
    PathProperty::Monochromatic,
    PathProperty::Proper,
    PathProperty::ConflictFree,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn verifiers_match_raw_definitions((g, f) in common::colored(8, 12, 3)) {
        let n = g.n();
        let mut raw = [true; 3];
        for s in 0..n {
            for t in s + 1..n {
                let paths = common::raw_path_colors(&g, &f, s, t);
                raw[0] &= paths.iter().any(|c| is_monochromatic(c));
                raw[1] &= paths.iter().any(|c| is_proper(c));
                raw[2] &= paths.iter().any(|c| !singleton_colors(c).is_empty());
            }
        }
        let got = all_verdicts(&g, &f).map(|v| v.holds);
        prop_assert_eq!(got, raw);
    }

    #[test]
    fn color_distance_matches_raw_definition((g, f) in common::colored(7, 10, 4)) {
        for s in 0..g.n() {
            for t in s + 1..g.n() {
                let best = common::raw_path_colors(&g, &f, s, t).iter().map(|c| distinct_colors(c)).min().unwrap();
                prop_assert_eq!(color_distance(&g, &f, s, t).unwrap(), best);
            }
        }
    }

    #[test]
    fn witnesses_revalidate((g, f) in common::colored(8, 12, 3)) {
        for (verdict, property) in all_verdicts(&g, &f).iter().zip(PROPERTIES) {
            if verdict.holds {
                prop_assert_eq!(verdict.witnesses.len(), g.n() * (g.n() - 1) / 2);
                prop_assert!(verdict.failing_pair.is_none());
                for w in &verdict.witnesses {
                    prop_assert!(w.validate(&g, &f, property));
                }
            } else {
                prop_assert!(verdict.failing_pair.is_some());
            }
        }
    }

    #[test]
    fn color_distance_is_a_metric((g, f) in common::colored(10, 16, 4)) {
        let n = g.n();
        let d: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).map(|v| color_distance(&g, &f, u, v).unwrap()).collect())
            .collect();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(d[u][v] == 0, u == v);
                prop_assert_eq!(d[u][v], d[v][u]);
                for w in 0..n {
                    prop_assert!(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
    }

    #[test]
    fn monochromatic_means_diameter_one((g, f) in common::colored(8, 12, 3)) {
        let mono = monochromatic_connected(&g, &f).unwrap().holds;
        prop_assert_eq!(mono, color_diameter(&g, &f).unwrap() == 1);
        prop_assert_eq!(mono, is_k_color_connection(&g, &f, 1).unwrap());
    }

    #[test]
    fn verdicts_ignore_color_names((g, f) in common::colored(8, 12, 3), perm in Just([1u32, 2, 3]).prop_shuffle(), offset in 0u32..9) {
        let renamed = EdgeColoring::new(&g, f.colors().iter().map(|&c| perm[c as usize - 1] + offset * 3).collect()).unwrap();
        let before = all_verdicts(&g, &f).map(|v| v.holds);
        let after = all_verdicts(&g, &renamed).map(|v| v.holds);
        prop_assert_eq!(before, after);
    }
}
