mod common;

use std::time::Instant;

use colorconn::graph::families;
use colorconn::tree_cck::{cck_tree, cck_tree_witness};
use colorconn::verifiers::color_distance;
use colorconn::{color_classes, Graph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn small_diameter_keeps_every_color(t in common::tree(14), k in 1usize..14) {
        prop_assume!(t.diameter().unwrap() <= k);
        prop_assert_eq!(cck_tree(&t, k).unwrap(), t.m());
    }

    #[test]
    fn witness_has_the_tree_shape(t in common::tree(12), k in 1usize..8) {
        let f = cck_tree_witness(&t, k).unwrap();
        let view = color_classes(&t, &f).unwrap();
        prop_assert!(view.classes.iter().all(|c| c.is_tree()));
        let nontrivial: Vec<_> = view.classes.iter().filter(|c| c.edge_count() > 1).collect();
        for (i, a) in nontrivial.iter().enumerate() {
            for b in &nontrivial[i + 1..] {
                prop_assert!(a.vertices.iter().any(|v| b.vertices.binary_search(v).is_ok()));
            }
        }
        for leaf in (0..t.n()).filter(|&v| t.degree(v) == 1) {
            for class in &nontrivial {
                let near = class.vertices.iter().map(|&x| color_distance(&t, &f, leaf, x).unwrap()).min().unwrap();
                prop_assert!(near <= k / 2, "leaf {} is {} from color {}", leaf, near, class.color);
            }
        }
    }
}

#[test]
fn path_closed_form() {
    for n in 2..=64 {
        let p = families::path(n);
        for k in 1..=n + 2 {
            assert_eq!(cck_tree(&p, k).unwrap(), k.min(n - 1), "P{n} k={k}");
        }
    }
}

fn caterpillar_like(n: usize) -> Graph {
    // Deterministic pseudo-random tree: vertex i hangs off a vertex among the last 50.
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    let edges = (1..n)
        .map(|i| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            let back = 1 + (x % 50) as usize;
            (i.saturating_sub(back), i)
        })
        .collect();
    Graph::from_indices((0..n).map(|i| i.to_string()).collect(), edges).unwrap()
}

/// Log-log slope of runtime against `n` over three decades.
#[test]
fn runtime_is_roughly_linear() {
    let sizes = [1_000usize, 10_000, 100_000, 1_000_000];
    for (name, build) in [
        ("path", families::path as fn(usize) -> Graph),
        ("star", |n| families::star(n - 1)),
        ("random", caterpillar_like),
    ] {
        let mut points = Vec::new();
        for &n in &sizes {
            let t = build(n);
            let reps = (1_000_000 / n).clamp(1, 20);
            let start = Instant::now();
            for k in [3, 4] {
                for _ in 0..reps {
                    std::hint::black_box(cck_tree(&t, k).unwrap());
                }
            }
            let per = start.elapsed().as_secs_f64() / reps as f64;
            points.push(((n as f64).ln(), per.max(1e-9).ln()));
        }
        let mean_x = points.iter().map(|p| p.0).sum::<f64>() / points.len() as f64;
        let mean_y = points.iter().map(|p| p.1).sum::<f64>() / points.len() as f64;
        let slope = points
            .iter()
            .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
            .sum::<f64>()
            / points.iter().map(|p| (p.0 - mean_x).powi(2)).sum::<f64>();
        println!("{name}: slope {slope:.2}");
        assert!(slope < 1.5, "{name}: runtime grows like n^{slope:.2}");
    }
}
