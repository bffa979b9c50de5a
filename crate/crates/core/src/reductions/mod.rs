//! SAT formulas compiled into gadget graphs, and satisfying assignments
//! compiled into the certificate colorings of the sufficiency proofs.
//!
//! Vertex labels are structured strings such as `u[2][1][15]`, `t[3][6]`,
//! `v[1][8]` or `s0`. Variable and clause indices are 1-based; `k` is the
//! position of an occurrence in its variable's occurrence list.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, EdgeId, Graph, VertexId};
use crate::oracles::cnf::Cnf3Formula;

pub mod cfc;
pub mod claim;
pub mod mc;
pub mod pc;

pub use cfc::{build_cfc_reduction, cfc_certificate_coloring};
pub use claim::{gadget_claim_check_pc, ClaimModel, ClaimReport};
pub use mc::{build_cc1_reduction, cc1_certificate_coloring, Cc1Certificate, ColorTree};
pub use pc::{build_pc_reduction, pc_certificate_coloring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// NAE-3SAT to `pc(G) = 2`.
    ProperConnection,
    /// NAE-3SAT to `cfc(G) = 2` with `h(G) = 2`.
    ConflictFree,
    /// 3SAT to `cc_1(G) > m(G) - n(G) + 2`.
    Monochromatic,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ProperConnection => "pc",
            Self::ConflictFree => "cfc",
            Self::Monochromatic => "cc1",
        })
    }
}

/// One literal occurrence: clause `j` (1-based), slot `r` in 1..=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub clause: usize,
    pub slot: usize,
    pub positive: bool,
}

/// Occurrences of every variable in clause order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceIndex {
    lists: Vec<Vec<Occurrence>>,
}

impl OccurrenceIndex {
    /// Fails with [`Error::UnusedVariable`] if some variable never occurs.
    pub fn new(phi: &Cnf3Formula) -> Result<Self> {
        if phi.num_clauses() == 0 {
            return Err(Error::InvalidFormula("formula has no clauses".into()));
        }
        phi.require_all_used()?;
        let mut lists = vec![Vec::new(); phi.num_vars() as usize];
        for (j, clause) in phi.clauses().iter().enumerate() {
            for (r, lit) in clause.iter().enumerate() {
                lists[lit.var as usize - 1].push(Occurrence {
                    clause: j + 1,
                    slot: r + 1,
                    positive: lit.positive,
                });
            }
        }
        Ok(Self { lists })
    }

    /// Occurrences of `x_i`; entry `k - 1` is occurrence `k`.
    pub fn of(&self, var: usize) -> &[Occurrence] {
        &self.lists[var - 1]
    }

    /// `m_i` for every variable.
    pub fn counts(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    /// `(variable, k)` of the occurrence in clause `j`, slot `r`.
    pub fn locate(&self, clause: usize, slot: usize) -> Option<(usize, usize)> {
        self.lists.iter().enumerate().find_map(|(i, list)| {
            list.iter()
                .position(|o| o.clause == clause && o.slot == slot)
                .map(|k| (i + 1, k + 1))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMeta {
    pub kind: ReductionKind,
    pub num_vars: usize,
    pub num_clauses: usize,
    /// `m_i`, indexed by `i - 1`.
    pub occurrences: Vec<usize>,
}

/// Boundary edges of one gadget, in a fixed order documented by the builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetEntries {
    pub gadget: String,
    pub edges: Vec<EdgeId>,
}

/// A reduction output: the graph plus the names of its parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    /// Structured label of every vertex; injective.
    pub roles: BTreeMap<String, VertexId>,
    /// Extra names for vertices that play two roles after identification,
    /// such as `w[j][r]` merged into `u[i][k][8]`.
    pub aliases: BTreeMap<String, VertexId>,
    pub entries: Vec<GadgetEntries>,
    /// Named vertex sets: the clique set `S`, the set `V0`, and so on.
    pub vertex_sets: BTreeMap<String, Vec<VertexId>>,
    pub meta: GadgetMeta,
}

impl GadgetGraph {
    /// Looks a name up among roles, then aliases.
    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.roles
            .get(name)
            .or_else(|| self.aliases.get(name))
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge(&self, a: &str, b: &str) -> Result<EdgeId> {
        let (u, v) = (self.vertex(a)?, self.vertex(b)?);
        self.graph
            .edge_between(u, v)
            .ok_or_else(|| Error::Construction(format!("no edge {a}-{b}")))
    }

    pub fn entries_of(&self, gadget: &str) -> Option<&[EdgeId]> {
        self.entries
            .iter()
            .find(|e| e.gadget == gadget)
            .map(|e| e.edges.as_slice())
    }

    pub fn vertex_set(&self, name: &str) -> &[VertexId] {
        self.vertex_sets.get(name).map_or(&[], Vec::as_slice)
    }
}

/// Incremental construction with named vertices and aliases.
#[derive(Default)]
pub(crate) struct Builder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    aliases: BTreeMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name).or_else(|| self.aliases.get(name)) {
            return v;
        }
        let v = self.labels.len();
        self.labels.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    /// Makes `alias` another name for the vertex called `target`.
    pub(crate) fn alias(&mut self, alias: &str, target: &str) {
        let v = self.vertex(target);
        self.aliases.insert(alias.to_string(), v);
    }

    pub(crate) fn edge(&mut self, a: &str, b: &str) {
        let (u, v) = (self.vertex(a), self.vertex(b));
        self.edges.push((u, v));
    }

    pub(crate) fn path(&mut self, names: &[String]) {
        for w in names.windows(2) {
            self.edge(&w[0], &w[1]);
        }
    }

    pub(crate) fn clique(&mut self, names: &[String]) {
        for (x, a) in names.iter().enumerate() {
            for b in &names[x + 1..] {
                self.edge(a, b);
            }
        }
    }

    /// The graph, its roles and its aliases.
    pub(crate) fn finish(self) -> Result<(Graph, Names, Names)> {
        let roles = self.index.into_iter().collect();
        let graph = Graph::from_indices(self.labels, self.edges)?;
        Ok((graph, roles, self.aliases))
    }
}

type Names = BTreeMap<String, VertexId>;

/// Assigns colors to edges by vertex name; every edge must be colored.
pub(crate) struct Painter<'a> {
    gadget: &'a GadgetGraph,
    pub(crate) colors: Vec<Color>,
}

impl<'a> Painter<'a> {
    pub(crate) fn new(gadget: &'a GadgetGraph) -> Self {
        Self {
            colors: vec![0; gadget.graph.m()],
            gadget,
        }
    }

    pub(crate) fn set(&mut self, a: &str, b: &str, c: Color) -> Result<()> {
        let e = self.gadget.edge(a, b)?;
        self.colors[e] = c;
        Ok(())
    }

    pub(crate) fn get(&self, a: &str, b: &str) -> Result<Color> {
        Ok(self.colors[self.gadget.edge(a, b)?])
    }

    pub(crate) fn finish(self) -> Result<EdgeColoring> {
        let graph = &self.gadget.graph;
        if let Some(e) = self.colors.iter().position(|&c| c == 0) {
            let (x, y) = graph.edge(e);
            return Err(Error::Construction(format!(
                "edge {}-{} left uncolored",
                graph.label(x),
                graph.label(y)
            )));
        }
        EdgeColoring::new(graph, self.colors)
    }
}

pub(crate) fn edge_by_name(
    graph: &Graph,
    roles: &BTreeMap<String, VertexId>,
    aliases: &BTreeMap<String, VertexId>,
    a: &str,
    b: &str,
) -> Result<EdgeId> {
    let find = |x: &str| {
        roles
            .get(x)
            .or_else(|| aliases.get(x))
            .copied()
            .ok_or_else(|| Error::UnknownVertex(x.to_string()))
    };
    graph
        .edge_between(find(a)?, find(b)?)
        .ok_or_else(|| Error::Construction(format!("no edge {a}-{b}")))
}
