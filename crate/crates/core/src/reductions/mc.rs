//! 3SAT to `cc_1(G) > m(G) - n(G) + 2`.
//!
//! The construction assembles a sparse graph `H` and takes `G` as the
//! complement of `H + K(V0) - P`, where `P` is a Hamilton path on `V0`.
//! Non-adjacent pairs of `G` are exactly the edges of `H` and the pairs of
//! `V0` off `P`, so a monochromatic-connecting coloring must place both
//! ends of every such pair in one color tree.
//!
//! Variable `x_i` with `m_i` occurrences: cycle `u[i][1..6m_i]` and paths
//! `u[i][6k-5] v[i][2k-1] v[i][2k]`. Occurrence `k` in clause `j`: vertices
//! `w[i][3k-2..3k]` with `w[i][3k]` joined to `s[j][4]` and to the other
//! two. Clause `j`: path `s[j][1..5]` and the edge `s[j][3] s`.

use std::collections::{BTreeSet, HashSet};

use microlp::{ComparisonOp, OptimizationDirection, Problem};

use crate::error::{Error, Result};
use crate::graph::{waste, Color, EdgeColoring, EdgeId, Graph, VertexId};
use crate::oracles::cnf::{Assignment, Cnf3Formula};
use crate::verifiers::UnionFind;

use super::{Builder, GadgetEntries, GadgetGraph, GadgetMeta, OccurrenceIndex, ReductionKind};

/// Largest candidate color tree, in vertices, tried by the certificate search.
pub const MAX_TREE_VERTICES: usize = 6;

fn u(i: usize, t: usize) -> String {
    format!("u[{i}][{t}]")
}

fn v(i: usize, t: usize) -> String {
    format!("v[{i}][{t}]")
}

fn w(i: usize, t: usize) -> String {
    format!("w[{i}][{t}]")
}

fn s(j: usize, t: usize) -> String {
    format!("s[{j}][{t}]")
}

struct Assembled {
    builder: Builder,
    /// Every edge of `H` with the clause it is charged to: clause edges to
    /// their clause, gadget edges to the clause of their occurrence block.
    h_edges: Vec<(String, String, usize)>,
    v0: Vec<String>,
    counts: Vec<usize>,
}

fn assemble(phi: &Cnf3Formula) -> Result<Assembled> {
    let occ = OccurrenceIndex::new(phi)?;
    let n = phi.num_vars() as usize;
    let m = phi.num_clauses();
    let counts = occ.counts();
    let mut h = Vec::new();
    let mut v0 = Vec::with_capacity(7 * m);
    for i in 1..=n {
        let list = occ.of(i);
        let len = 6 * counts[i - 1];
        for t in 1..=len {
            h.push((u(i, t), u(i, t % len + 1), list[(t - 1) / 6].clause));
        }
        for (k0, o) in list.iter().enumerate() {
            let k = k0 + 1;
            let j = o.clause;
            h.push((u(i, 6 * k - 5), v(i, 2 * k - 1), j));
            h.push((v(i, 2 * k - 1), v(i, 2 * k), j));
            let hub = w(i, 3 * k);
            h.push((hub.clone(), s(j, 4), j));
            h.push((hub.clone(), w(i, 3 * k - 1), j));
            h.push((hub.clone(), w(i, 3 * k - 2), j));
            if o.positive {
                h.push((hub, u(i, 6 * k - 1), j));
                h.push((w(i, 3 * k - 1), u(i, 6 * k - 2), j));
            } else {
                h.push((hub, u(i, 6 * k - 5), j));
                h.push((w(i, 3 * k - 1), u(i, 6 * k - 4), j));
            }
            h.push((w(i, 3 * k - 2), u(i, 6 * k - 3), j));
            v0.push(v(i, 2 * k));
            v0.push(u(i, 6 * k - 2));
        }
    }
    for j in 1..=m {
        for t in 1..5 {
            h.push((s(j, t), s(j, t + 1), j));
        }
        h.push((s(j, 3), "s".to_string(), j));
        v0.push(s(j, 1));
    }
    v0.sort();
    let mut builder = Builder::default();
    for (a, b, _) in &h {
        builder.edge(a, b);
    }
    Ok(Assembled {
        builder,
        h_edges: h,
        v0,
        counts,
    })
}

/// Builds `G`. Entry group `P` lists the Hamilton path edges in path order;
/// vertex set `V0` lists `V0` in path order.
pub fn build_cc1_reduction(phi: &Cnf3Formula) -> Result<GadgetGraph> {
    Ok(build_with_h(phi)?.0)
}

/// An edge of `H` and the clause it is charged to.
type ChargedEdge = (VertexId, VertexId, usize);

fn build_with_h(phi: &Cnf3Formula) -> Result<(GadgetGraph, Vec<ChargedEdge>)> {
    let Assembled {
        mut builder,
        h_edges,
        v0,
        counts,
    } = assemble(phi)?;
    let on_path: HashSet<(&str, &str)> = v0
        .windows(2)
        .flat_map(|p| {
            [
                (p[0].as_str(), p[1].as_str()),
                (p[1].as_str(), p[0].as_str()),
            ]
        })
        .collect();
    for (x, a) in v0.iter().enumerate() {
        for b in &v0[x + 1..] {
            if !on_path.contains(&(a.as_str(), b.as_str())) {
                builder.edge(a, b);
            }
        }
    }
    let (assembled, roles, aliases) = builder.finish()?;
    let graph = assembled.complement();
    let h = h_edges
        .iter()
        .map(|(a, b, p)| (roles[a], roles[b], *p))
        .collect();
    let v0_ids: Vec<VertexId> = v0.iter().map(|x| roles[x]).collect();
    let path_edges = v0_ids
        .windows(2)
        .map(|p| {
            graph
                .edge_between(p[0], p[1])
                .expect("path edges survive complementation")
        })
        .collect();
    let gadget = GadgetGraph {
        entries: vec![GadgetEntries {
            gadget: "P".into(),
            edges: path_edges,
        }],
        vertex_sets: [("V0".to_string(), v0_ids)].into(),
        graph,
        roles,
        aliases,
        meta: GadgetMeta {
            kind: ReductionKind::Monochromatic,
            num_vars: phi.num_vars() as usize,
            num_clauses: phi.num_clauses(),
            occurrences: counts,
        },
    };
    Ok((gadget, h))
}

/// One nontrivial color class of the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorTree {
    pub color: Color,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl ColorTree {
    pub fn waste(&self) -> usize {
        self.edges.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cc1Certificate {
    pub coloring: EdgeColoring,
    /// Color 1 is the path `P`; the rest cover the edges of `H`.
    pub trees: Vec<ColorTree>,
    pub waste: usize,
    /// `38m - 2`.
    pub budget: usize,
}

/// Every vertex set of size `2..=max` that induces a connected subgraph of
/// the graph given by `adj`, each listed once in sorted order.
fn connected_sets(adj: &[Vec<VertexId>], max: usize) -> Vec<Vec<VertexId>> {
    let mut seen: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    let mut frontier: Vec<Vec<VertexId>> = (0..adj.len()).map(|x| vec![x]).collect();
    for _ in 1..max {
        let mut next = BTreeSet::new();
        for set in &frontier {
            for &x in set {
                for &y in &adj[x] {
                    if let Err(pos) = set.binary_search(&y) {
                        let mut grown = set.clone();
                        grown.insert(pos, y);
                        next.insert(grown);
                    }
                }
            }
        }
        seen.extend(next.iter().cloned());
        frontier = next.into_iter().collect();
    }
    seen.into_iter().collect()
}

/// A spanning tree of `vertices` using only edges accepted by `free`.
fn spanning_tree(
    graph: &Graph,
    vertices: &[VertexId],
    free: &impl Fn(EdgeId) -> bool,
) -> Option<Vec<EdgeId>> {
    let inside: HashSet<VertexId> = vertices.iter().copied().collect();
    let mut reached = HashSet::from([vertices[0]]);
    let mut stack = vec![vertices[0]];
    let mut tree = Vec::with_capacity(vertices.len() - 1);
    while let Some(x) = stack.pop() {
        for &(y, e) in graph.neighbors(x) {
            if inside.contains(&y) && free(e) && reached.insert(y) {
                tree.push(e);
                stack.push(y);
            }
        }
    }
    (tree.len() + 1 == vertices.len()).then_some(tree)
}

fn lp_error(e: impl std::fmt::Display) -> Error {
    Error::Construction(format!("set cover solver: {e}"))
}

/// A monochromatic-connecting coloring of `G` for a satisfying assignment.
///
/// `P` gets color 1. The assignment turns each variable cycle, fixing one
/// tree per occurrence, and each clause gets the tree `s[j][2] s s[j][1]
/// s[j][3]`. The rest of `H` is covered clause by clause, each clause
/// together with its three occurrence blocks, by a minimum-cost choice of
/// vertex sets with at most [`MAX_TREE_VERTICES`] vertices; a set whose
/// induced subgraph in `G` is disconnected pays for one connector vertex.
/// When two chosen sets compete for the same edges of `G`, the pair is
/// excluded and the choice is solved again. Every remaining edge gets its
/// own color. If the waste exceeds `38m - 2`, the other cycle turns are
/// tried in turn.
pub fn cc1_certificate_coloring(phi: &Cnf3Formula, a: &Assignment) -> Result<Cc1Certificate> {
    phi.require_sat(a)?;
    let (gadget, h) = build_with_h(phi)?;
    let n = phi.num_vars() as usize;
    let own: u64 = (0..n)
        .filter(|&i| a.value(i as u32 + 1))
        .map(|i| 1 << i)
        .sum();
    let mut least = usize::MAX;
    for flip in 0..1u64 << n {
        let turn = Assignment::from_mask(n, own ^ flip);
        let cert = attempt(phi, &turn, &gadget, &h)?;
        if cert.waste <= cert.budget {
            return Ok(cert);
        }
        least = least.min(cert.waste);
    }
    Err(Error::Construction(format!(
        "waste {least} exceeds budget {}",
        38 * phi.num_clauses() - 2
    )))
}

/// One pass of the search with the variable cycles turned by `turn`.
fn attempt(
    phi: &Cnf3Formula,
    turn: &Assignment,
    gadget: &GadgetGraph,
    h: &[(VertexId, VertexId, usize)],
) -> Result<Cc1Certificate> {
    let graph = &gadget.graph;
    let path = gadget.entries_of("P").unwrap_or(&[]);
    let on_path: HashSet<EdgeId> = path.iter().copied().collect();
    let off_path = |e: EdgeId| !on_path.contains(&e);

    let mut forest = Forest {
        used: vec![false; graph.m()],
        trees: vec![ColorTree {
            color: 1,
            vertices: gadget.vertex_set("V0").to_vec(),
            edges: path.to_vec(),
        }],
    };
    for &e in path {
        forest.used[e] = true;
    }
    let seeded = seeded_sets(phi, turn, gadget)?;
    let costs: Vec<usize> = seeded
        .iter()
        .map(|set| set_cost(graph, set, &off_path))
        .collect();
    forest = forest.plant(graph, &seeded, &costs)?.0;

    let mut parts = vec![Vec::new(); phi.num_clauses()];
    for &(x, y, j) in h {
        parts[j - 1].push((x, y));
    }
    for part in parts {
        let open: Vec<_> = part
            .into_iter()
            .filter(|&(x, y)| !forest.joins(x, y))
            .collect();
        let mut adj = vec![Vec::new(); graph.n()];
        for &(x, y) in &open {
            adj[x].push(y);
            adj[y].push(x);
        }
        let candidates = connected_sets(&adj, MAX_TREE_VERTICES);
        let free = |e: EdgeId| !forest.used[e];
        let costs: Vec<usize> = candidates
            .iter()
            .map(|set| set_cost(graph, set, &free))
            .collect();
        let mut exclusions = Vec::new();
        loop {
            let picks = cover(&candidates, &costs, &open, &exclusions)?;
            let sets: Vec<_> = picks.iter().map(|&c| candidates[c].clone()).collect();
            let wanted: Vec<_> = picks.iter().map(|&c| costs[c]).collect();
            let (grown, conflicts) = forest.clone().plant(graph, &sets, &wanted)?;
            let fresh: Vec<_> = conflicts
                .into_iter()
                .map(|(x, y)| (picks[x], picks[y]))
                .filter(|pair| !exclusions.contains(pair))
                .collect();
            if fresh.is_empty() || exclusions.len() >= MAX_EXCLUSIONS {
                forest = grown;
                break;
            }
            exclusions.extend(fresh);
        }
    }

    let trees = forest.trees;
    let mut colors: Vec<Color> = vec![0; graph.m()];
    for tree in &trees {
        for &e in &tree.edges {
            colors[e] = tree.color;
        }
    }
    let fresh = trees.len() as Color + 1..;
    for (next, c) in fresh.zip(colors.iter_mut().filter(|c| **c == 0)) {
        *c = next;
    }
    let coloring = EdgeColoring::new(graph, colors)?;
    Ok(Cc1Certificate {
        waste: waste(graph, &coloring)?,
        coloring,
        trees,
        budget: 38 * gadget.meta.num_clauses - 2,
    })
}

/// Pairwise exclusions tried per part before the cheapest found cover is kept.
const MAX_EXCLUSIONS: usize = 64;

/// Waste of a tree on `set`: one extra edge when `set` needs a connector.
fn set_cost(graph: &Graph, set: &[VertexId], free: &impl Fn(EdgeId) -> bool) -> usize {
    match spanning_tree(graph, set, free) {
        Some(_) => set.len() - 2,
        None => set.len() - 1,
    }
}

#[derive(Clone)]
struct Forest {
    used: Vec<bool>,
    trees: Vec<ColorTree>,
}

impl Forest {
    fn joins(&self, x: VertexId, y: VertexId) -> bool {
        self.trees
            .iter()
            .any(|t| t.vertices.contains(&x) && t.vertices.contains(&y))
    }

    /// Adds an edge-disjoint tree for each set, most constrained first.
    /// Also returns the index pairs `(earlier, later)` where the later set
    /// cost more than `costs` allows because the earlier took its edges.
    fn plant(
        mut self,
        graph: &Graph,
        sets: &[Vec<VertexId>],
        costs: &[usize],
    ) -> Result<(Self, Vec<(usize, usize)>)> {
        let inside = |set: &[VertexId], e: EdgeId| {
            let (x, y) = graph.edge(e);
            set.binary_search(&x).is_ok() && set.binary_search(&y).is_ok()
        };
        let mut demand = vec![0usize; graph.m()];
        for set in sets {
            for (e, d) in demand.iter_mut().enumerate() {
                if inside(set, e) {
                    *d += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by_key(|&x| {
            let room = (0..graph.m())
                .filter(|&e| !self.used[e] && inside(&sets[x], e))
                .count();
            room.saturating_sub(sets[x].len())
        });
        let mut owner = vec![usize::MAX; graph.m()];
        let mut conflicts = Vec::new();
        for x in order {
            let (vertices, edges) =
                realize(graph, &sets[x], &self.used, &demand).ok_or_else(|| {
                    Error::Construction(format!(
                        "no edge-disjoint tree spans {:?}",
                        sets[x].iter().map(|&v| graph.label(v)).collect::<Vec<_>>()
                    ))
                })?;
            if edges.len() - 1 > costs[x] {
                let mut rivals: Vec<usize> = (0..graph.m())
                    .filter(|&e| owner[e] != usize::MAX && inside(&sets[x], e))
                    .map(|e| owner[e])
                    .collect();
                rivals.sort_unstable();
                rivals.dedup();
                conflicts.extend(rivals.into_iter().map(|r| (r.min(x), r.max(x))));
            }
            for &e in &edges {
                self.used[e] = true;
                owner[e] = x;
            }
            self.trees.push(ColorTree {
                color: self.trees.len() as Color + 1,
                vertices,
                edges,
            });
        }
        Ok((self, conflicts))
    }
}

/// The fixed trees: in the gadget of a variable false under `turn` every
/// `u[i][6k-5] v[i][2k] u[i][6k-4] v[i][2k-1]`, for a true one every
/// `u[i][6k-6] v[i][2k] u[i][6k-5] v[i][2k-1]`, and per clause
/// `s[j][2] s s[j][1] s[j][3]`.
fn seeded_sets(
    phi: &Cnf3Formula,
    turn: &Assignment,
    gadget: &GadgetGraph,
) -> Result<Vec<Vec<VertexId>>> {
    let mut named = Vec::new();
    for (i0, &mi) in gadget.meta.occurrences.iter().enumerate() {
        let i = i0 + 1;
        let len = 6 * mi;
        let shift = usize::from(turn.value(i as u32));
        for k in 1..=mi {
            let at = |t: usize| u(i, (t + len - 1 - shift) % len + 1);
            named.push(vec![
                at(6 * k - 5),
                v(i, 2 * k),
                at(6 * k - 4),
                v(i, 2 * k - 1),
            ]);
        }
    }
    for j in 1..=phi.num_clauses() {
        named.push(vec![s(j, 2), "s".to_string(), s(j, 1), s(j, 3)]);
    }
    named
        .iter()
        .map(|set| {
            let mut ids = set
                .iter()
                .map(|x| gadget.vertex(x))
                .collect::<Result<Vec<_>>>()?;
            ids.sort_unstable();
            Ok(ids)
        })
        .collect()
}

/// Indices of a minimum-cost choice of candidates covering every pair in
/// `open`, never taking both sets of an excluded pair.
fn cover(
    candidates: &[Vec<VertexId>],
    costs: &[usize],
    open: &[(VertexId, VertexId)],
    exclusions: &[(usize, usize)],
) -> Result<Vec<usize>> {
    if open.is_empty() {
        return Ok(Vec::new());
    }
    let mut problem = Problem::new(OptimizationDirection::Minimize);
    let vars: Vec<_> = costs
        .iter()
        .map(|&c| problem.add_binary_var(c as f64))
        .collect();
    for &(x, y) in open {
        let terms: Vec<_> = candidates
            .iter()
            .zip(&vars)
            .filter(|(set, _)| set.binary_search(&x).is_ok() && set.binary_search(&y).is_ok())
            .map(|(_, &var)| (var, 1.0))
            .collect();
        problem.add_constraint(terms, ComparisonOp::Ge, 1.0);
    }
    for &(p, q) in exclusions {
        problem.add_constraint(vec![(vars[p], 1.0), (vars[q], 1.0)], ComparisonOp::Le, 1.0);
    }
    let solution = problem
        .solve()
        .map_err(lp_error)?
        .into_solution()
        .map_err(|_| Error::Construction("set cover solver was interrupted".into()))?;
    Ok((0..candidates.len())
        .filter(|&c| solution.var_value(vars[c]) > 0.5)
        .collect())
}

/// A tree over `set` avoiding used edges and preferring uncontested ones,
/// adding the first connector vertex that makes one possible when `set`
/// alone does not.
fn realize(
    graph: &Graph,
    set: &[VertexId],
    used: &[bool],
    demand: &[usize],
) -> Option<(Vec<VertexId>, Vec<EdgeId>)> {
    let kruskal = |vertices: &[VertexId]| {
        let mut inner: Vec<EdgeId> = (0..graph.m())
            .filter(|&e| {
                let (x, y) = graph.edge(e);
                !used[e] && vertices.contains(&x) && vertices.contains(&y)
            })
            .collect();
        inner.sort_by_key(|&e| demand[e]);
        let mut uf = UnionFind::new(graph.n());
        let tree: Vec<EdgeId> = inner
            .into_iter()
            .filter(|&e| {
                let (x, y) = graph.edge(e);
                uf.union(x, y)
            })
            .collect();
        (tree.len() + 1 == vertices.len()).then_some(tree)
    };
    if let Some(t) = kruskal(set) {
        return Some((set.to_vec(), t));
    }
    (0..graph.n()).filter(|c| !set.contains(c)).find_map(|c| {
        let mut with = set.to_vec();
        with.push(c);
        kruskal(&with).map(|t| (with, t))
    })
}
