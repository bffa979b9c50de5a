//! `h(G)`: the largest conflict-free connection number among the components
//! of the subgraph induced by the cut-edges.

use super::solvers::solve_cfc;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HValue {
    pub value: usize,
    /// Set when `G` has no cut-edges, in which case `value` is 0.
    pub no_cut_edges: bool,
}

pub fn h_value(graph: &Graph) -> Result<HValue> {
    let bridges = graph.cut_edges();
    if bridges.is_empty() {
        return Ok(HValue {
            value: 0,
            no_cut_edges: true,
        });
    }
    let (forest, _) = graph.edge_induced(&bridges);
    let mut value = 0;
    for comp in forest.components() {
        let edges: Vec<_> = (0..forest.m())
            .filter(|&e| comp.binary_search(&forest.edge(e).0).is_ok())
            .collect();
        let (tree, _) = forest.edge_induced(&edges);
        value = value.max(solve_cfc(&tree)?.value);
    }
    Ok(HValue {
        value,
        no_cut_edges: false,
    })
}
