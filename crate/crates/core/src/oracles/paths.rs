//! Raw-definition path enumeration, independent of the verifiers.

use crate::graph::{Color, EdgeColoring, Graph, VertexId};

/// Every simple `s`-`t` path as a vertex sequence.
pub fn all_simple_paths(graph: &Graph, s: VertexId, t: VertexId) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut path = vec![s];
    let mut on_path = vec![false; graph.n()];
    on_path[s] = true;
    walk(graph, t, &mut path, &mut on_path, &mut out);
    out
}

fn walk(
    graph: &Graph,
    t: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    let v = *path.last().unwrap();
    if v == t {
        out.push(path.clone());
        return;
    }
    for &(w, _) in graph.neighbors(v) {
        if !on_path[w] {
            on_path[w] = true;
            path.push(w);
            walk(graph, t, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Edge colors along a vertex sequence.
pub fn path_colors(graph: &Graph, coloring: &EdgeColoring, path: &[VertexId]) -> Vec<Color> {
    path.windows(2)
        .map(|w| coloring.color(graph.edge_between(w[0], w[1]).unwrap()))
        .collect()
}

pub fn is_monochromatic(colors: &[Color]) -> bool {
    colors.iter().all(|&c| c == colors[0])
}

pub fn is_proper(colors: &[Color]) -> bool {
    colors
        .iter()
        .zip(colors.iter().skip(1))
        .all(|(a, b)| a != b)
}

/// Colors that appear on exactly one edge.
pub fn singleton_colors(colors: &[Color]) -> Vec<Color> {
    let mut out: Vec<Color> = colors
        .iter()
        .copied()
        .filter(|c| colors.iter().filter(|&&d| d == *c).count() == 1)
        .collect();
    out.sort_unstable();
    out
}

/// Number of distinct colors along a path.
pub fn distinct_colors(colors: &[Color]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}
