//! `cc_k` of trees in linear time.
//!
//! The tree is rooted at a middle vertex of a diameter path and its vertices
//! are numbered so that every child precedes its parent. Each vertex then
//! pushes two accumulators into its parent once: `a` counts edges that can
//! take fresh colors, `b` is the depth of the unsaturated part below the
//! vertex, capped at `(k-1)/2` for odd `k` and `k/2 - 1` for even `k`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph, VertexId};
use crate::verifiers::is_k_color_connection;

/// A tree with vertices renumbered `0..n` so that `parent[i] > i` for every
/// non-root position `i`; the root is the last position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    /// `order[i]` is the original vertex at position `i`.
    pub order: Vec<VertexId>,
    /// Position of the parent of position `i`; `None` only for the root.
    pub parent: Vec<Option<usize>>,
    /// Edge id joining position `i` to its parent.
    pub parent_edge: Vec<Option<EdgeId>>,
}

impl RootedTree {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn root(&self) -> VertexId {
        *self.order.last().unwrap()
    }
}

type ParentLink = Option<(VertexId, EdgeId)>;

/// BFS order, parent links and depths.
fn bfs_tree(tree: &Graph, root: VertexId) -> (Vec<VertexId>, Vec<ParentLink>, Vec<usize>) {
    let n = tree.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(w, e) in tree.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    (order, parent, depth)
}

fn farthest(depth: &[usize]) -> VertexId {
    let max = *depth.iter().max().unwrap();
    depth.iter().position(|&d| d == max).unwrap()
}

fn require_tree(tree: &Graph) -> Result<()> {
    if tree.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// A middle vertex of a diameter path found by two breadth-first sweeps;
/// of two middles the smaller vertex index wins.
pub fn select_root(tree: &Graph) -> Result<VertexId> {
    require_tree(tree)?;
    let (_, _, d0) = bfs_tree(tree, 0);
    let a = farthest(&d0);
    let (_, parent, da) = bfs_tree(tree, a);
    let b = farthest(&da);
    let mut diameter_path = vec![b];
    let mut v = b;
    while let Some((p, _)) = parent[v] {
        diameter_path.push(p);
        v = p;
    }
    let len = diameter_path.len() - 1;
    let lo = diameter_path[len / 2];
    let hi = diameter_path[len.div_ceil(2)];
    Ok(lo.min(hi))
}

/// Reverse breadth-first numbering from `root`.
pub fn order_vertices(tree: &Graph, root: VertexId) -> Result<RootedTree> {
    require_tree(tree)?;
    if root >= tree.n() {
        return Err(Error::UnknownVertex(format!("#{root}")));
    }
    let (mut order, parent, _) = bfs_tree(tree, root);
    order.reverse();
    let n = order.len();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    Ok(RootedTree {
        parent: order
            .iter()
            .map(|&v| parent[v].map(|(p, _)| position[p]))
            .collect(),
        parent_edge: order.iter().map(|&v| parent[v].map(|(_, e)| e)).collect(),
        order,
    })
}

/// The accumulators after one run of the algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CckTrace {
    pub rooted: RootedTree,
    pub k: usize,
    pub cap: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Edges from a saturated child to its parent.
    pub saturated: Vec<EdgeId>,
    pub value: usize,
}

/// Runs the odd or even variant and records every accumulator.
pub fn cck_trace(tree: &Graph, k: usize) -> Result<CckTrace> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    require_tree(tree)?;
    if tree.n() < 2 {
        return Err(Error::InvalidParameter(
            "tree needs at least two vertices".into(),
        ));
    }
    let rooted = order_vertices(tree, select_root(tree)?)?;
    let n = rooted.n();
    let cap = if k % 2 == 1 { (k - 1) / 2 } else { k / 2 - 1 };
    let mut a = vec![0usize; n];
    let mut b = vec![0usize; n];
    let mut saturated = Vec::new();
    for i in 0..n - 1 {
        let p = rooted.parent[i].expect("only the root lacks a parent");
        if b[i] == cap {
            a[p] += a[i];
            b[p] = cap;
            saturated.push(rooted.parent_edge[i].unwrap());
        } else {
            a[p] += a[i] + 1;
            b[p] = b[p].max(b[i] + 1);
        }
    }
    let root_a = a[n - 1];
    let value = if k % 2 == 1 {
        if saturated.is_empty() {
            root_a
        } else {
            root_a + 1
        }
    } else {
        root_a + max_degree(tree, &saturated)
    };
    Ok(CckTrace {
        rooted,
        k,
        cap,
        a,
        b,
        saturated,
        value,
    })
}

fn max_degree(tree: &Graph, edges: &[EdgeId]) -> usize {
    let mut deg = vec![0usize; tree.n()];
    for &e in edges {
        let (u, v) = tree.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// `cc_k(T)`.
pub fn cck_tree(tree: &Graph, k: usize) -> Result<usize> {
    Ok(cck_trace(tree, k)?.value)
}

/// A coloring with `cck_tree(T, k)` colors, checked to be a k-color
/// connection coloring before it is returned.
pub fn cck_tree_witness(tree: &Graph, k: usize) -> Result<EdgeColoring> {
    let trace = cck_trace(tree, k)?;
    let mut colors: Vec<Color> = vec![0; tree.m()];
    let mut next: Color = 1;
    if k % 2 == 1 {
        if !trace.saturated.is_empty() {
            for &e in &trace.saturated {
                colors[e] = next;
            }
            next += 1;
        }
    } else if !trace.saturated.is_empty() {
        next = color_branches(tree, &trace.saturated, &mut colors);
    }
    for c in colors.iter_mut().filter(|c| **c == 0) {
        *c = next;
        next += 1;
    }
    let coloring = EdgeColoring::new(tree, colors)?;
    if coloring.num_colors() as usize != trace.value {
        return Err(Error::Construction(format!(
            "witness uses {} colors, expected {}",
            coloring.num_colors(),
            trace.value
        )));
    }
    if !is_k_color_connection(tree, &coloring, k)? {
        return Err(Error::Construction(format!(
            "greedy coloring with {} colors is not a {k}-color connection coloring",
            trace.value
        )));
    }
    Ok(coloring)
}

/// Colors the edge set `s` with one color per branch at a vertex of maximum
/// `s`-degree; edges of `s` not reachable from it join the first branch.
/// Returns the next unused color.
fn color_branches(tree: &Graph, s: &[EdgeId], colors: &mut [Color]) -> Color {
    let mut in_s = vec![false; tree.m()];
    for &e in s {
        in_s[e] = true;
    }
    let mut deg = vec![0usize; tree.n()];
    for &e in s {
        let (u, v) = tree.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let max = *deg.iter().max().unwrap();
    let hub = deg.iter().position(|&d| d == max).unwrap();
    let mut next: Color = 1;
    for &(w, e) in tree.neighbors(hub) {
        if !in_s[e] {
            continue;
        }
        let c = next;
        next += 1;
        colors[e] = c;
        let mut stack = vec![(w, hub)];
        while let Some((x, from)) = stack.pop() {
            for &(y, f) in tree.neighbors(x) {
                if y != from && in_s[f] {
                    colors[f] = c;
                    stack.push((y, x));
                }
            }
        }
    }
    for &e in s {
        if colors[e] == 0 {
            colors[e] = 1;
        }
    }
    next
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn roots() {
        assert_eq!(select_root(&path(5)), Ok(2));
        assert_eq!(select_root(&star(6)), Ok(0));
        // spine 0..6; the middle of the spine is 3
        assert_eq!(select_root(&caterpillar(7)), Ok(3));
        assert_eq!(select_root(&cycle(4)), Err(Error::NotATree));
    }

    #[test]
    fn ordering() {
        let r = order_vertices(&path(3), 1).unwrap();
        assert_eq!(r.root(), 1);
        assert_eq!(r.parent, vec![Some(2), Some(2), None]);
        let r = order_vertices(&star(4), 0).unwrap();
        assert_eq!(r.order[4], 0);
        for (i, p) in r.parent.iter().enumerate().take(4) {
            assert!(p.unwrap() > i);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(cck_tree(&path(5), 3), Ok(3));
        assert_eq!(cck_tree(&star(4), 1), Ok(1));
        assert_eq!(cck_tree(&star(3), 2), Ok(3));
        assert_eq!(cck_tree(&path(5), 2), Ok(2));
        assert_eq!(cck_tree(&path(2), 1), Ok(1));
    }

    #[test]
    fn p5_trace() {
        let t = cck_trace(&path(5), 3).unwrap();
        assert_eq!(t.cap, 1);
        assert_eq!(t.a[t.rooted.n() - 1], 2);
        assert_eq!(t.saturated.len(), 2);
    }

    #[test]
    fn k1_is_one_color() {
        for g in [path(6), star(5), caterpillar(6)] {
            assert_eq!(cck_tree(&g, 1), Ok(1));
            let f = cck_tree_witness(&g, 1).unwrap();
            assert_eq!(f.num_colors(), 1);
        }
    }

    #[test]
    fn star_with_unsaturated_children() {
        // cap 1 for k = 3: no child is saturated, every edge gets its own color
        assert_eq!(cck_tree(&star(5), 3), Ok(5));
    }

    #[test]
    fn witnesses() {
        let f = cck_tree_witness(&path(5), 3).unwrap();
        assert_eq!(f.num_colors(), 3);
        let g = caterpillar(6);
        let d = g.diameter().unwrap();
        let f = cck_tree_witness(&g, d).unwrap();
        assert_eq!(f.num_colors() as usize, g.m());
    }

    #[test]
    fn errors() {
        assert!(cck_tree(&path(3), 0).is_err());
        assert_eq!(cck_tree(&cycle(3), 1), Err(Error::NotATree));
        assert!(cck_tree(&path(1), 1).is_err());
    }
}
