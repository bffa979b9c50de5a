//! Proptest strategies shared by the property suites.

#![allow(dead_code)]

use colorconn::{Color, EdgeColoring, Graph};
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A random tree on `2..=max_n` vertices: vertex `i` hangs off some earlier vertex.
pub fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(any::<prop::sample::Index>(), n - 1))
        .prop_map(|parents| {
            let edges = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            Graph::from_indices(labels(parents.len() + 1), edges).unwrap()
        })
}

/// A connected graph: a random spanning tree plus extra pairs chosen by mask.
pub fn connected(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (tree(max_n), any::<u64>()).prop_map(move |(t, mask)| {
        let n = t.n();
        let mut edges = t.edges().to_vec();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if edges.len() >= max_m {
                    break;
                }
                if !t.has_edge(u, v)
                    && mask >> (bit % 64) & 1 == 1
                    && (mask >> ((bit * 7 + 3) % 64)) & 1 == 1
                {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::from_indices(labels(n), edges).unwrap()
    })
}

/// A graph together with a coloring drawn from `1..=palette`.
pub fn colored(
    max_n: usize,
    max_m: usize,
    palette: Color,
) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    connected(max_n, max_m)
        .prop_flat_map(move |g| {
            let m = g.m();
            (Just(g), proptest::collection::vec(1..=palette, m))
        })
        .prop_map(|(g, colors)| {
            let f = EdgeColoring::new(&g, colors).unwrap();
            (g, f)
        })
}

/// Every simple path between `s` and `t`, as edge colors.
pub fn raw_path_colors(g: &Graph, f: &EdgeColoring, s: usize, t: usize) -> Vec<Vec<Color>> {
    colorconn::oracles::paths::all_simple_paths(g, s, t)
        .iter()
        .map(|p| colorconn::oracles::paths::path_colors(g, f, p))
        .collect()
}
