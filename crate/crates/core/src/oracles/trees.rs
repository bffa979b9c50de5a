//! Enumeration of non-isomorphic free trees.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Canonical string of a tree given as adjacency lists: the smaller of the
/// rooted encodings at its one or two centers.
fn canonical(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    if n == 1 {
        return "()".into();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(adj, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// with labels `"0".."n-1"`, sorted by canonical form.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<(String, Vec<(usize, usize)>)> = BTreeSet::new();
    level.insert(("()".into(), Vec::new()));
    for size in 2..=n {
        let mut next = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for (_, edges) in &level {
            for v in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((v, size - 1));
                let mut adj = vec![Vec::new(); size];
                for &(a, b) in &grown {
                    adj[a].push(b);
                    adj[b].push(a);
                }
                let key = canonical(&adj);
                if seen.insert(key.clone()) {
                    next.insert((key, grown));
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|(_, edges)| {
            Graph::from_indices((0..n).map(|i| i.to_string()).collect(), edges)
                .expect("grown trees are simple")
        })
        .collect()
}
