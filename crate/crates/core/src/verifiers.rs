//! Exact decision procedures for monochromatic, proper and conflict-free
//! connectivity, plus color-distance and color-diameter.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph, VertexId};

const INF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathProperty {
    Monochromatic,
    Proper,
    ConflictFree,
}

impl PathProperty {
    /// Whether a color sequence (one entry per path edge) has the property.
    pub fn holds_on(self, colors: &[Color]) -> bool {
        match self {
            Self::Monochromatic => colors.windows(2).all(|w| w[0] == w[1]),
            Self::Proper => colors.windows(2).all(|w| w[0] != w[1]),
            Self::ConflictFree => unique_color(colors).is_some(),
        }
    }
}

/// Smallest color used exactly once in the sequence.
pub fn unique_color(colors: &[Color]) -> Option<Color> {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if j - i == 1 {
            return Some(sorted[i]);
        }
        i = j;
    }
    None
}

/// A simple path together with the colors of its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<VertexId>,
    pub colors: Vec<Color>,
    /// A color used exactly once, when one exists.
    pub unique_color: Option<Color>,
}

impl PathWitness {
    /// Reads the colors of a vertex sequence. Panics if two consecutive
    /// vertices are not adjacent.
    pub fn from_vertices(graph: &Graph, coloring: &EdgeColoring, vertices: Vec<VertexId>) -> Self {
        let colors: Vec<Color> = vertices
            .windows(2)
            .map(|w| {
                let e = graph
                    .edge_between(w[0], w[1])
                    .expect("witness walks along edges");
                coloring.color(e)
            })
            .collect();
        Self {
            unique_color: unique_color(&colors),
            vertices,
            colors,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Re-checks the witness against the graph and coloring.
    pub fn validate(&self, graph: &Graph, coloring: &EdgeColoring, property: PathProperty) -> bool {
        if self.vertices.is_empty() || self.colors.len() + 1 != self.vertices.len() {
            return false;
        }
        let mut seen = vec![false; graph.n()];
        for &v in &self.vertices {
            if v >= graph.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        for (w, &c) in self.vertices.windows(2).zip(&self.colors) {
            match graph.edge_between(w[0], w[1]) {
                Some(e) if coloring.color(e) == c => {}
                _ => return false,
            }
        }
        if self.unique_color != unique_color(&self.colors) {
            return false;
        }
        property.holds_on(&self.colors)
    }
}

/// Outcome of an all-pairs connectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// One witness per pair `s < t` in lexicographic pair order; filled only
    /// when the property holds.
    pub witnesses: Vec<PathWitness>,
    /// Lexicographically first pair without a suitable path.
    pub failing_pair: Option<(VertexId, VertexId)>,
}

impl Verdict {
    fn collect(n: usize, per_pair: Vec<((VertexId, VertexId), Option<PathWitness>)>) -> Self {
        debug_assert_eq!(per_pair.len(), n * n.saturating_sub(1) / 2);
        let failing_pair = per_pair.iter().find(|(_, w)| w.is_none()).map(|(p, _)| *p);
        let holds = failing_pair.is_none();
        let witnesses = if holds {
            per_pair.into_iter().filter_map(|(_, w)| w).collect()
        } else {
            Vec::new()
        };
        Self {
            holds,
            witnesses,
            failing_pair,
        }
    }
}

fn check_inputs(graph: &Graph, coloring: &EdgeColoring) -> Result<()> {
    coloring.check(graph)?;
    graph.require_connected()
}

fn check_vertex(graph: &Graph, v: VertexId) -> Result<()> {
    if v < graph.n() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{v}")))
    }
}

fn all_pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n)
        .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
        .collect()
}

/// BFS distances from `source` using only edges accepted by `allow`.
fn bfs_filtered(graph: &Graph, source: VertexId, allow: impl Fn(EdgeId) -> bool) -> Vec<u32> {
    let mut dist = vec![INF; graph.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in graph.neighbors(x) {
            if dist[y] == INF && allow(e) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Lexicographically smallest shortest path from `s` to the BFS root whose
/// distances are `dist_to_target`, restricted to allowed edges.
fn greedy_descent(
    graph: &Graph,
    s: VertexId,
    dist_to_target: &[u32],
    allow: impl Fn(EdgeId) -> bool,
) -> Vec<VertexId> {
    let mut path = vec![s];
    let mut v = s;
    while dist_to_target[v] > 0 {
        let &(w, _) = graph
            .neighbors(v)
            .iter()
            .find(|&&(w, e)| allow(e) && dist_to_target[w] + 1 == dist_to_target[v])
            .expect("BFS layers are consistent");
        path.push(w);
        v = w;
    }
    path
}

// ---------------------------------------------------------------------------
// monochromatic

/// Shortest monochromatic `s`-`t` path, lexicographically smallest among
/// the shortest ones.
pub fn monochromatic_path(
    graph: &Graph,
    coloring: &EdgeColoring,
    s: VertexId,
    t: VertexId,
) -> Result<Option<PathWitness>> {
    coloring.check(graph)?;
    check_vertex(graph, s)?;
    check_vertex(graph, t)?;
    let comps = ColorComponents::new(graph, coloring);
    Ok(comps.path(graph, coloring, s, t))
}

struct ColorComponents {
    /// `root[c - 1][v]` is the union-find root of `v` in color `c`.
    root: Vec<Vec<u32>>,
}

impl ColorComponents {
    fn new(graph: &Graph, coloring: &EdgeColoring) -> Self {
        let root = coloring
            .classes()
            .iter()
            .map(|edges| {
                let mut uf = UnionFind::new(graph.n());
                for &e in edges {
                    let (u, v) = graph.edge(e);
                    uf.union(u, v);
                }
                (0..graph.n()).map(|v| uf.find(v) as u32).collect()
            })
            .collect();
        Self { root }
    }

    fn path(
        &self,
        graph: &Graph,
        coloring: &EdgeColoring,
        s: VertexId,
        t: VertexId,
    ) -> Option<PathWitness> {
        if s == t {
            return Some(PathWitness::from_vertices(graph, coloring, vec![s]));
        }
        let mut best: Option<Vec<VertexId>> = None;
        for (i, roots) in self.root.iter().enumerate() {
            if roots[s] != roots[t] {
                continue;
            }
            let c = i as Color + 1;
            let allow = |e: EdgeId| coloring.color(e) == c;
            let dist = bfs_filtered(graph, t, allow);
            let candidate = greedy_descent(graph, s, &dist, allow);
            let better = match &best {
                None => true,
                Some(b) => (candidate.len(), &candidate) < (b.len(), b),
            };
            if better {
                best = Some(candidate);
            }
        }
        best.map(|p| PathWitness::from_vertices(graph, coloring, p))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Every pair joined by a monochromatic path.
pub fn monochromatic_connected(graph: &Graph, coloring: &EdgeColoring) -> Result<Verdict> {
    check_inputs(graph, coloring)?;
    let comps = ColorComponents::new(graph, coloring);
    let per_pair = all_pairs(graph.n())
        .into_par_iter()
        .map(|(s, t)| ((s, t), comps.path(graph, coloring, s, t)))
        .collect();
    Ok(Verdict::collect(graph.n(), per_pair))
}

// ---------------------------------------------------------------------------
// proper

fn arc_id(graph: &Graph, from: VertexId, e: EdgeId) -> usize {
    let (u, _) = graph.edge(e);
    2 * e + usize::from(from != u)
}

/// For every arc `x -> y`, the length of a shortest properly colored walk
/// from `x` to `target` that starts with that arc.
fn proper_walk_bounds(graph: &Graph, coloring: &EdgeColoring, target: VertexId) -> Vec<u32> {
    let mut dist = vec![INF; 2 * graph.m()];
    let mut queue = VecDeque::new();
    for &(x, e) in graph.neighbors(target) {
        let a = arc_id(graph, x, e);
        dist[a] = 1;
        queue.push_back((x, e));
    }
    while let Some((y, e_next)) = queue.pop_front() {
        let d = dist[arc_id(graph, y, e_next)];
        let c = coloring.color(e_next);
        for &(x, e) in graph.neighbors(y) {
            if coloring.color(e) == c {
                continue;
            }
            let a = arc_id(graph, x, e);
            if dist[a] == INF {
                dist[a] = d + 1;
                queue.push_back((x, e));
            }
        }
    }
    dist
}

struct ProperSearch<'a> {
    graph: &'a Graph,
    coloring: &'a EdgeColoring,
    bounds: &'a [u32],
    target: VertexId,
    visited: Vec<bool>,
    path: Vec<VertexId>,
}

impl ProperSearch<'_> {
    fn dfs(&mut self, v: VertexId, incoming: Option<Color>, depth: u32, limit: u32) -> bool {
        if v == self.target {
            return true;
        }
        for &(w, e) in self.graph.neighbors(v) {
            let c = self.coloring.color(e);
            if self.visited[w] || incoming == Some(c) {
                continue;
            }
            let h = self.bounds[arc_id(self.graph, v, e)];
            if h == INF || depth + h > limit {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.dfs(w, Some(c), depth + 1, limit) {
                return true;
            }
            self.path.pop();
            self.visited[w] = false;
        }
        false
    }
}

fn proper_path_with(
    graph: &Graph,
    coloring: &EdgeColoring,
    bounds: &[u32],
    s: VertexId,
    t: VertexId,
) -> Option<PathWitness> {
    if s == t {
        return Some(PathWitness::from_vertices(graph, coloring, vec![s]));
    }
    let start = graph
        .neighbors(s)
        .iter()
        .map(|&(_, e)| bounds[arc_id(graph, s, e)])
        .min()?;
    if start == INF {
        return None;
    }
    let mut search = ProperSearch {
        graph,
        coloring,
        bounds,
        target: t,
        visited: vec![false; graph.n()],
        path: vec![s],
    };
    search.visited[s] = true;
    for limit in start..graph.n() as u32 {
        if search.dfs(s, None, 0, limit) {
            return Some(PathWitness::from_vertices(graph, coloring, search.path));
        }
    }
    None
}

/// Shortest properly colored `s`-`t` path, lexicographically smallest among
/// the shortest ones.
pub fn proper_path(
    graph: &Graph,
    coloring: &EdgeColoring,
    s: VertexId,
    t: VertexId,
) -> Result<Option<PathWitness>> {
    coloring.check(graph)?;
    check_vertex(graph, s)?;
    check_vertex(graph, t)?;
    let bounds = proper_walk_bounds(graph, coloring, t);
    Ok(proper_path_with(graph, coloring, &bounds, s, t))
}

/// Every pair joined by a properly colored path.
pub fn properly_connected(graph: &Graph, coloring: &EdgeColoring) -> Result<Verdict> {
    check_inputs(graph, coloring)?;
    let n = graph.n();
    let mut per_pair: Vec<_> = (0..n)
        .into_par_iter()
        .flat_map_iter(|t| {
            let bounds = proper_walk_bounds(graph, coloring, t);
            (0..t)
                .map(|s| ((s, t), proper_path_with(graph, coloring, &bounds, s, t)))
                .collect::<Vec<_>>()
        })
        .collect();
    per_pair.sort_by_key(|(p, _)| *p);
    Ok(Verdict::collect(n, per_pair))
}

// ---------------------------------------------------------------------------
// conflict-free

/// Two-unit min-cost flow on the vertex-split graph `G - E_c`, used to find
/// the shortest simple path whose only `c`-edge is a prescribed edge.
struct Flow {
    head: Vec<usize>,
    cap: Vec<i32>,
    cost: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cost: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(1);
        self.cost.push(cost);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
        self.cost.push(-cost);
    }

    /// Pushes one unit along a cheapest augmenting path; returns its cost.
    fn augment(&mut self, source: usize, sink: usize) -> Option<i32> {
        let nodes = self.adj.len();
        let mut dist = vec![i32::MAX; nodes];
        let mut via = vec![usize::MAX; nodes];
        let mut queued = vec![false; nodes];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            queued[x] = false;
            for &a in &self.adj[x] {
                if self.cap[a] == 0 {
                    continue;
                }
                let y = self.head[a];
                let d = dist[x] + self.cost[a];
                if d < dist[y] {
                    dist[y] = d;
                    via[y] = a;
                    if !queued[y] {
                        queued[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        if dist[sink] == i32::MAX {
            return None;
        }
        let mut y = sink;
        while y != source {
            let a = via[y];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            y = self.head[a ^ 1];
        }
        Some(dist[sink])
    }
}

/// Shortest simple `s`-`t` path through edge `e` avoiding every other edge of
/// `e`'s color, as a vertex sequence.
fn path_through_edge(
    graph: &Graph,
    coloring: &EdgeColoring,
    s: VertexId,
    t: VertexId,
    e: EdgeId,
) -> Option<Vec<VertexId>> {
    let n = graph.n();
    let c = coloring.color(e);
    let (a, b) = graph.edge(e);
    let (z, sink) = (2 * n, 2 * n + 1);
    let mut flow = Flow::new(2 * n + 2);
    for v in 0..n {
        flow.arc(2 * v, 2 * v + 1, 0);
    }
    for (id, &(x, y)) in graph.edges().iter().enumerate() {
        if coloring.color(id) == c {
            continue;
        }
        for (p, q) in [(x, y), (y, x)] {
            if p != s && p != t {
                flow.arc(2 * p + 1, 2 * q, 1);
            }
        }
    }
    flow.arc(z, 2 * a, 0);
    flow.arc(z, 2 * b, 0);
    flow.arc(2 * s + 1, sink, 0);
    flow.arc(2 * t + 1, sink, 0);
    flow.augment(z, sink)?;
    flow.augment(z, sink)?;

    // Follow saturated forward arcs from a start vertex to s or t.
    let trace = |start: VertexId| -> Vec<VertexId> {
        let mut path = vec![start];
        let mut v = start;
        while v != s && v != t {
            let out = 2 * v + 1;
            let next = flow.adj[out]
                .iter()
                .copied()
                .find(|&arc| arc % 2 == 0 && flow.cap[arc] == 0 && flow.head[arc] < 2 * n)
                .expect("unit flow leaves every inner vertex");
            v = flow.head[next] / 2;
            path.push(v);
        }
        path
    };
    let from_a = trace(a);
    let from_b = trace(b);
    let (mut to_s, to_t) = if *from_a.last().unwrap() == s {
        (from_a, from_b)
    } else {
        (from_b, from_a)
    };
    to_s.reverse();
    to_s.extend(to_t);
    Some(to_s)
}

fn conflict_free_pair(
    graph: &Graph,
    coloring: &EdgeColoring,
    classes: &[Vec<EdgeId>],
    s: VertexId,
    t: VertexId,
) -> Option<PathWitness> {
    if s == t {
        return Some(PathWitness::from_vertices(graph, coloring, vec![s]));
    }
    let dist_t = bfs_filtered(graph, t, |_| true);
    if dist_t[s] == INF {
        return None;
    }
    let shortest =
        PathWitness::from_vertices(graph, coloring, greedy_descent(graph, s, &dist_t, |_| true));
    if shortest.unique_color.is_some() {
        return Some(shortest);
    }
    let floor = dist_t[s];

    let mut candidates = Vec::new();
    for (i, edges) in classes.iter().enumerate() {
        let c = i as Color + 1;
        let ds = bfs_filtered(graph, s, |e| coloring.color(e) != c);
        let dt = bfs_filtered(graph, t, |e| coloring.color(e) != c);
        for &e in edges {
            let (a, b) = graph.edge(e);
            let one = ds[a].saturating_add(dt[b]);
            let two = ds[b].saturating_add(dt[a]);
            let lb = one.min(two);
            if lb != INF {
                candidates.push((lb + 1, e));
            }
        }
    }
    candidates.sort_unstable_by_key(|&(lb, e)| (lb, coloring.color(e), e));

    let mut best: Option<Vec<VertexId>> = None;
    for (lb, e) in candidates {
        if let Some(b) = &best {
            if lb as usize >= b.len() - 1 {
                break;
            }
        }
        if let Some(p) = path_through_edge(graph, coloring, s, t, e) {
            if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                let done = p.len() - 1 == floor as usize;
                best = Some(p);
                if done {
                    break;
                }
            }
        }
    }
    best.map(|p| PathWitness::from_vertices(graph, coloring, p))
}

/// Shortest conflict-free `s`-`t` path.
pub fn conflict_free_path(
    graph: &Graph,
    coloring: &EdgeColoring,
    s: VertexId,
    t: VertexId,
) -> Result<Option<PathWitness>> {
    coloring.check(graph)?;
    check_vertex(graph, s)?;
    check_vertex(graph, t)?;
    Ok(conflict_free_pair(
        graph,
        coloring,
        &coloring.classes(),
        s,
        t,
    ))
}

/// Every pair joined by a conflict-free path.
pub fn conflict_free_connected(graph: &Graph, coloring: &EdgeColoring) -> Result<Verdict> {
    check_inputs(graph, coloring)?;
    let classes = coloring.classes();
    let per_pair = all_pairs(graph.n())
        .into_par_iter()
        .map(|(s, t)| ((s, t), conflict_free_pair(graph, coloring, &classes, s, t)))
        .collect();
    Ok(Verdict::collect(graph.n(), per_pair))
}

// ---------------------------------------------------------------------------
// color distance

fn next_combination(idx: &mut [usize], p: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < p - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Union-find over edges whose color (0-based) is in `subset`.
fn subset_components(graph: &Graph, classes: &[Vec<EdgeId>], subset: &[usize]) -> Vec<usize> {
    let mut uf = UnionFind::new(graph.n());
    for &c in subset {
        for &e in &classes[c] {
            let (u, v) = graph.edge(e);
            uf.union(u, v);
        }
    }
    (0..graph.n()).map(|v| uf.find(v)).collect()
}

/// Minimum number of colors over all `u`-`v` paths.
pub fn color_distance(
    graph: &Graph,
    coloring: &EdgeColoring,
    u: VertexId,
    v: VertexId,
) -> Result<usize> {
    check_inputs(graph, coloring)?;
    check_vertex(graph, u)?;
    check_vertex(graph, v)?;
    if u == v {
        return Ok(0);
    }
    let classes = coloring.classes();
    let p = classes.len();
    for k in 1..=p {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = {
                let mut m = vec![false; p];
                idx.iter().for_each(|&c| m[c] = true);
                m
            };
            let dist = bfs_filtered(graph, u, |e| mask[coloring.color(e) as usize - 1]);
            if dist[v] != INF {
                return Ok(k);
            }
            if !next_combination(&mut idx, p) {
                break;
            }
        }
    }
    unreachable!("connected graphs reach every vertex with all colors")
}

/// For trees the path between two vertices is unique, so the color-distance
/// is the number of distinct colors on it.
fn tree_color_distances_from(graph: &Graph, coloring: &EdgeColoring, root: VertexId) -> Vec<usize> {
    let mut out = vec![0; graph.n()];
    let mut counts = vec![0u32; coloring.num_colors() as usize + 1];
    let mut distinct = 0usize;
    // (vertex, parent, edge into vertex, next neighbor slot)
    let mut stack: Vec<(VertexId, VertexId, Option<EdgeId>, usize)> =
        vec![(root, usize::MAX, None, 0)];
    while let Some(top) = stack.len().checked_sub(1) {
        let (v, parent, via, slot) = stack[top];
        if let Some(&(w, e)) = graph.neighbors(v).get(slot) {
            stack[top].3 += 1;
            if w == parent {
                continue;
            }
            let c = coloring.color(e) as usize;
            counts[c] += 1;
            if counts[c] == 1 {
                distinct += 1;
            }
            out[w] = distinct;
            stack.push((w, v, Some(e), 0));
        } else {
            stack.pop();
            if let Some(e) = via {
                let c = coloring.color(e) as usize;
                counts[c] -= 1;
                if counts[c] == 0 {
                    distinct -= 1;
                }
            }
        }
    }
    out
}

/// Maximum color-distance over all pairs.
pub fn color_diameter(graph: &Graph, coloring: &EdgeColoring) -> Result<usize> {
    check_inputs(graph, coloring)?;
    if graph.is_tree() {
        return Ok((0..graph.n())
            .into_par_iter()
            .map(|r| {
                tree_color_distances_from(graph, coloring, r)
                    .into_iter()
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0));
    }
    let n = graph.n();
    let classes = coloring.classes();
    let p = classes.len();
    let mut covered = vec![false; n * n];
    let mut open = n * (n - 1) / 2;
    for k in 1..=p {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let comp = subset_components(graph, &classes, &idx);
            for s in 0..n {
                for t in s + 1..n {
                    if !covered[s * n + t] && comp[s] == comp[t] {
                        covered[s * n + t] = true;
                        open -= 1;
                    }
                }
            }
            if open == 0 {
                return Ok(k);
            }
            if !next_combination(&mut idx, p) {
                break;
            }
        }
    }
    unreachable!("all colors together connect a connected graph")
}

/// First pair (in lexicographic order) whose color-distance exceeds `k`.
pub fn k_color_failing_pair(
    graph: &Graph,
    coloring: &EdgeColoring,
    k: usize,
) -> Result<Option<(VertexId, VertexId)>> {
    check_inputs(graph, coloring)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = graph.n();
    let classes = coloring.classes();
    let p = classes.len();
    if k >= p {
        return Ok(None);
    }
    if graph.is_tree() {
        let rows: Vec<Option<VertexId>> = (0..n)
            .into_par_iter()
            .map(|s| {
                let d = tree_color_distances_from(graph, coloring, s);
                (s + 1..n).find(|&t| d[t] > k)
            })
            .collect();
        return Ok(rows
            .into_iter()
            .enumerate()
            .find_map(|(s, t)| t.map(|t| (s, t))));
    }
    let mut covered = vec![false; n * n];
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let comp = subset_components(graph, &classes, &idx);
        for s in 0..n {
            for t in s + 1..n {
                if comp[s] == comp[t] {
                    covered[s * n + t] = true;
                }
            }
        }
        if !next_combination(&mut idx, p) {
            break;
        }
    }
    Ok((0..n)
        .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
        .find(|&(s, t)| !covered[s * n + t]))
}

/// `cD_f(G) <= k`.
pub fn is_k_color_connection(graph: &Graph, coloring: &EdgeColoring, k: usize) -> Result<bool> {
    Ok(k_color_failing_pair(graph, coloring, k)?.is_none())
}
