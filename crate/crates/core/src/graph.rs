//! Simple undirected graphs with stable string labels and edge colorings.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
/// Color ids are contiguous from 1 once an [`EdgeColoring`] is built.
pub type Color = u32;

/// A finite simple undirected graph.
///
/// Vertices are addressed by index (insertion order of the labels); edges are
/// stored with the smaller endpoint first and keep their insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    edge_lookup: HashMap<(VertexId, VertexId), EdgeId>,
}

/// Builds a graph from labels and label pairs, rejecting duplicates, loops,
/// parallel edges and undeclared endpoints.
pub fn build_graph<L, A, B>(labels: &[L], edges: &[(A, B)]) -> Result<Graph>
where
    L: AsRef<str>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let mut index = HashMap::with_capacity(labels.len());
    let mut owned = Vec::with_capacity(labels.len());
    for label in labels {
        let label = label.as_ref();
        if index.insert(label.to_string(), owned.len()).is_some() {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        owned.push(label.to_string());
    }
    let mut pairs = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        let (a, b) = (a.as_ref(), b.as_ref());
        let u = *index
            .get(a)
            .ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
        let v = *index
            .get(b)
            .ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
        pairs.push((u, v));
    }
    Graph::from_parts(owned, index, pairs)
}

impl Graph {
    /// Builds a graph from owned labels and index pairs.
    pub fn from_indices(labels: Vec<String>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= labels.len() {
                    return Err(Error::UnknownEndpoint(format!("#{w}")));
                }
            }
        }
        Self::from_parts(labels, index, edges)
    }

    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, VertexId>,
        pairs: Vec<(VertexId, VertexId)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_lookup = HashMap::with_capacity(pairs.len());
        for (u, v) in pairs {
            if u == v {
                return Err(Error::LoopEdge(labels[u].clone()));
            }
            let key = (u.min(v), u.max(v));
            if edge_lookup.contains_key(&key) {
                return Err(Error::ParallelEdge(labels[u].clone(), labels[v].clone()));
            }
            let id = edges.len();
            edge_lookup.insert(key, id);
            edges.push(key);
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            labels,
            index,
            edges,
            adjacency,
            edge_lookup,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Like [`Graph::vertex`] but reports a missing label as an error.
    pub fn require_vertex(&self, label: &str) -> Result<VertexId> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Neighbors of `v` with the connecting edge, sorted by neighbor index.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &(y, _) in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Bridges of the graph, as edge ids in increasing order.
    pub fn cut_edges(&self) -> Vec<EdgeId> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut clock = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            // (vertex, edge used to enter it, next adjacency slot)
            let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            while let Some(top) = stack.len().checked_sub(1) {
                let (x, via, slot) = stack[top];
                if let Some(&(y, e)) = self.adjacency[x].get(slot) {
                    stack[top].2 += 1;
                    if Some(e) == via {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        disc[y] = clock;
                        low[y] = clock;
                        clock += 1;
                        stack.push((y, Some(e), 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(parent, _, _))) = (via, stack.last()) {
                        low[parent] = low[parent].min(low[x]);
                        if low[x] > disc[parent] {
                            bridges.push(e);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Largest shortest-path distance; errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v).into_iter().flatten() {
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// The complement on the same labels, edges in lexicographic order.
    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_indices(self.labels.clone(), pairs).expect("complement of a simple graph")
    }

    /// The subgraph formed by the given edges and the vertices they touch.
    /// Returns the subgraph and, for each of its vertices, the original id.
    pub fn edge_induced(&self, edge_ids: &[EdgeId]) -> (Graph, Vec<VertexId>) {
        let mut local = HashMap::new();
        let mut original = Vec::new();
        let mut pairs = Vec::with_capacity(edge_ids.len());
        for &e in edge_ids {
            let (u, v) = self.edges[e];
            let mut map = |w: VertexId| {
                *local.entry(w).or_insert_with(|| {
                    original.push(w);
                    original.len() - 1
                })
            };
            let (a, b) = (map(u), map(v));
            pairs.push((a, b));
        }
        let labels = original.iter().map(|&w| self.labels[w].clone()).collect();
        let g = Graph::from_indices(labels, pairs).expect("edge subset of a simple graph");
        (g, original)
    }
}

/// A total map from edges to colors, normalized to ids `1..=num_colors`
/// by order of first appearance along the edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    num_colors: u32,
}

impl EdgeColoring {
    pub fn new(graph: &Graph, raw: Vec<Color>) -> Result<Self> {
        if raw.len() != graph.m() {
            return Err(Error::ColoringLength {
                expected: graph.m(),
                got: raw.len(),
            });
        }
        Ok(Self::normalized(raw))
    }

    pub fn from_fn(graph: &Graph, mut color_of: impl FnMut(EdgeId) -> Color) -> Self {
        Self::normalized((0..graph.m()).map(&mut color_of).collect())
    }

    /// Every edge gets the same color.
    pub fn uniform(graph: &Graph) -> Self {
        Self::normalized(vec![1; graph.m()])
    }

    /// Every edge gets its own color.
    pub fn rainbow(graph: &Graph) -> Self {
        Self::normalized((1..=graph.m() as Color).collect())
    }

    fn normalized(raw: Vec<Color>) -> Self {
        let mut rename: HashMap<Color, Color> = HashMap::new();
        let colors = raw
            .into_iter()
            .map(|c| {
                let next = rename.len() as Color + 1;
                *rename.entry(c).or_insert(next)
            })
            .collect();
        Self {
            colors,
            num_colors: rename.len() as u32,
        }
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    /// Edge ids grouped by color; index `c - 1` holds color `c`.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.num_colors as usize];
        for (e, &c) in self.colors.iter().enumerate() {
            out[c as usize - 1].push(e);
        }
        out
    }

    pub(crate) fn check(&self, graph: &Graph) -> Result<()> {
        if self.colors.len() == graph.m() {
            Ok(())
        } else {
            Err(Error::ColoringLength {
                expected: graph.m(),
                got: self.colors.len(),
            })
        }
    }
}

/// One color class `E_c` with its induced subgraph `F_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClass {
    pub color: Color,
    pub edges: Vec<EdgeId>,
    /// Vertices incident to the class, sorted.
    pub vertices: Vec<VertexId>,
    /// Components of `F_c`, each sorted; they cover exactly `vertices`.
    pub components: Vec<Vec<VertexId>>,
    pub is_forest: bool,
}

impl ColorClass {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest && self.components.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassView {
    pub classes: Vec<ColorClass>,
}

pub fn color_classes(graph: &Graph, coloring: &EdgeColoring) -> Result<ColorClassView> {
    coloring.check(graph)?;
    let classes = coloring
        .classes()
        .into_iter()
        .enumerate()
        .map(|(i, edges)| {
            let (sub, original) = graph.edge_induced(&edges);
            let components = sub
                .components()
                .into_iter()
                .map(|c| {
                    let mut c: Vec<_> = c.into_iter().map(|v| original[v]).collect();
                    c.sort_unstable();
                    c
                })
                .collect::<Vec<_>>();
            let mut vertices = original.clone();
            vertices.sort_unstable();
            ColorClass {
                color: i as Color + 1,
                is_forest: sub.m() + components.len() == sub.n(),
                edges,
                vertices,
                components,
            }
        })
        .collect();
    Ok(ColorClassView { classes })
}

/// Total waste `sum_c (m(F_c) - 1)`; every class must be a forest.
pub fn waste(graph: &Graph, coloring: &EdgeColoring) -> Result<usize> {
    let view = color_classes(graph, coloring)?;
    let mut total = 0;
    for class in &view.classes {
        if !class.is_forest {
            return Err(Error::CyclicColorClass(class.color));
        }
        total += class.edge_count() - 1;
    }
    Ok(total)
}

/// Standard graph families with labels `"0".."n-1"`.
pub mod families {
    use super::Graph;

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    fn make(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        Graph::from_indices(numbered(n), edges).expect("family graphs are simple")
    }

    pub fn path(n: usize) -> Graph {
        make(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        make(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        make(n, edges)
    }

    /// `K_{1,leaves}` with the center at index 0.
    pub fn star(leaves: usize) -> Graph {
        make(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        make(a + b, edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        make(10, edges)
    }

    /// A path spine of `spine` vertices with one extra leaf hung on every
    /// interior spine vertex.
    pub fn caterpillar(spine: usize) -> Graph {
        let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
        let mut n = spine;
        for s in 1..spine.saturating_sub(1) {
            edges.push((s, n));
            n += 1;
        }
        make(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn builds_small_graphs() {
        let g = build_graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        let k1 = build_graph::<_, &str, &str>(&["a"], &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn build_errors_are_distinct() {
        assert_eq!(
            build_graph(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::ParallelEdge("b".into(), "a".into()))
        );
        assert_eq!(
            build_graph(&["a", "a"], &[("a", "a")]),
            Err(Error::DuplicateVertex("a".into()))
        );
        assert_eq!(
            build_graph(&["a"], &[("a", "a")]),
            Err(Error::LoopEdge("a".into()))
        );
        assert_eq!(
            build_graph(&["a"], &[("a", "z")]),
            Err(Error::UnknownEndpoint("z".into()))
        );
    }

    #[test]
    fn components_and_connectivity() {
        assert_eq!(path(3).components(), vec![vec![0, 1, 2]]);
        let two = Graph::from_indices(vec!["x".into(), "y".into()], vec![]).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(!two.is_connected());
    }

    #[test]
    fn bridges() {
        assert_eq!(path(4).cut_edges(), vec![0, 1, 2]);
        assert!(cycle(5).cut_edges().is_empty());
        // K4 on 0..3 with pendants 3-4 and 3-5
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(3, 4), (3, 5)]);
        let g = Graph::from_indices((0..6).map(|i| i.to_string()).collect(), edges).unwrap();
        assert_eq!(g.cut_edges(), vec![6, 7]);
    }

    #[test]
    fn diameters() {
        assert_eq!(complete(5).diameter(), Ok(1));
        assert_eq!(path(6).diameter(), Ok(5));
        assert_eq!(cycle(5).diameter(), Ok(2));
        let two = Graph::from_indices(vec!["x".into(), "y".into()], vec![]).unwrap();
        assert_eq!(two.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn coloring_normalizes_by_first_appearance() {
        let g = path(4);
        let f = EdgeColoring::new(&g, vec![7, 3, 7]).unwrap();
        assert_eq!(f.colors(), &[1, 2, 1]);
        assert_eq!(f.num_colors(), 2);
        assert!(EdgeColoring::new(&g, vec![1]).is_err());
    }

    #[test]
    fn color_class_views() {
        let p3 = path(3);
        let view = color_classes(&p3, &EdgeColoring::new(&p3, vec![1, 2]).unwrap()).unwrap();
        assert_eq!(view.classes.len(), 2);
        assert!(view
            .classes
            .iter()
            .all(|c| c.edge_count() == 1 && c.is_forest));

        let c3 = cycle(3);
        let view = color_classes(&c3, &EdgeColoring::uniform(&c3)).unwrap();
        assert_eq!(view.classes.len(), 1);
        assert!(!view.classes[0].is_forest);

        let c5 = cycle(5);
        let f = EdgeColoring::new(&c5, vec![1, 1, 1, 1, 2]).unwrap();
        let view = color_classes(&c5, &f).unwrap();
        let sizes: Vec<_> = view.classes.iter().map(|c| c.edge_count()).collect();
        assert_eq!(sizes, vec![4, 1]);
        assert!(view.classes.iter().all(|c| c.is_forest));
    }

    #[test]
    fn waste_values() {
        let p5 = path(5);
        assert_eq!(waste(&p5, &EdgeColoring::rainbow(&p5)), Ok(0));
        assert_eq!(waste(&p5, &EdgeColoring::uniform(&p5)), Ok(3));
        let c5 = cycle(5);
        let f = EdgeColoring::new(&c5, vec![1, 1, 1, 1, 2]).unwrap();
        assert_eq!(waste(&c5, &f), Ok(3));
        assert_eq!(f.num_colors() as usize, c5.m() - 3);
        let c3 = cycle(3);
        assert_eq!(
            waste(&c3, &EdgeColoring::uniform(&c3)),
            Err(Error::CyclicColorClass(1))
        );
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.diameter(), Ok(2));
    }
}
