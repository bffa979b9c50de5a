//! Connection numbers by exhaustive search over edge partitions.

use std::ops::ControlFlow;

use super::partitions::for_each_partition;
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};
use crate::verifiers::{conflict_free_connected, is_k_color_connection, properly_connected};

/// Edge bound for the minimizing oracles (`pc`, `cfc`).
pub const MAX_MIN_EDGES: usize = 12;
/// Edge bound for the maximizing oracles (`cc_k`, `mc`).
pub const MAX_CCK_EDGES: usize = 10;

/// An optimal value with one coloring attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSolution {
    pub value: usize,
    pub coloring: EdgeColoring,
}

fn check(graph: &Graph, bound: usize) -> Result<()> {
    if graph.m() > bound {
        return Err(Error::Capacity {
            what: "edges",
            got: graph.m(),
            bound,
        });
    }
    graph.require_connected()
}

fn coloring_of(graph: &Graph, rgs: &[u32]) -> EdgeColoring {
    EdgeColoring::from_fn(graph, |e| rgs[e] + 1)
}

fn minimize(
    graph: &Graph,
    accept: impl Fn(&EdgeColoring) -> Result<bool>,
) -> Result<OracleSolution> {
    check(graph, MAX_MIN_EDGES)?;
    if graph.m() == 0 {
        return Ok(OracleSolution {
            value: 0,
            coloring: EdgeColoring::uniform(graph),
        });
    }
    for k in 1..=graph.m() {
        let hit = for_each_partition(graph.m(), k, |rgs| {
            let f = coloring_of(graph, rgs);
            match accept(&f) {
                Ok(true) => ControlFlow::Break(Ok(f)),
                Ok(false) => ControlFlow::Continue(()),
                Err(e) => ControlFlow::Break(Err(e)),
            }
        });
        if let Some(found) = hit {
            return found.map(|coloring| OracleSolution { value: k, coloring });
        }
    }
    unreachable!("the rainbow coloring is proper and conflict-free")
}

/// Proper connection number.
pub fn solve_pc(graph: &Graph) -> Result<OracleSolution> {
    minimize(graph, |f| Ok(properly_connected(graph, f)?.holds))
}

/// Conflict-free connection number.
pub fn solve_cfc(graph: &Graph) -> Result<OracleSolution> {
    minimize(graph, |f| Ok(conflict_free_connected(graph, f)?.holds))
}

/// `cc_k` together with every extremal coloring (up to renaming).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalColorings {
    pub value: usize,
    pub colorings: Vec<EdgeColoring>,
}

fn cck_search(graph: &Graph, k: usize, keep_all: bool) -> Result<ExtremalColorings> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    check(graph, MAX_CCK_EDGES)?;
    if graph.m() == 0 {
        return Ok(ExtremalColorings {
            value: 0,
            colorings: vec![EdgeColoring::uniform(graph)],
        });
    }
    for b in (1..=graph.m()).rev() {
        let mut found = Vec::new();
        let mut failure = None;
        for_each_partition(graph.m(), b, |rgs| {
            let f = coloring_of(graph, rgs);
            match is_k_color_connection(graph, &f, k) {
                Ok(true) => {
                    found.push(f);
                    if keep_all {
                        ControlFlow::Continue(())
                    } else {
                        ControlFlow::Break(())
                    }
                }
                Ok(false) => ControlFlow::Continue(()),
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if !found.is_empty() {
            return Ok(ExtremalColorings {
                value: b,
                colorings: found,
            });
        }
    }
    unreachable!("a single color has color-diameter 1")
}

/// Maximum number of colors in a k-color connection coloring.
pub fn solve_cck(graph: &Graph, k: usize) -> Result<OracleSolution> {
    let mut r = cck_search(graph, k, false)?;
    Ok(OracleSolution {
        value: r.value,
        coloring: r.colorings.swap_remove(0),
    })
}

/// Every coloring attaining `cc_k`.
pub fn extremal_cck_colorings(graph: &Graph, k: usize) -> Result<ExtremalColorings> {
    cck_search(graph, k, true)
}

/// Monochromatic connection number, `cc_1`.
pub fn solve_mc(graph: &Graph) -> Result<OracleSolution> {
    solve_cck(graph, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn proper_connection_numbers() {
        assert_eq!(solve_pc(&complete(4)).unwrap().value, 1);
        assert_eq!(solve_pc(&path(4)).unwrap().value, 2);
        assert_eq!(solve_pc(&cycle(5)).unwrap().value, 2);
        assert_eq!(solve_pc(&star(3)).unwrap().value, 3);
    }

    #[test]
    fn conflict_free_numbers() {
        assert_eq!(solve_cfc(&path(2)).unwrap().value, 1);
        assert_eq!(solve_cfc(&path(4)).unwrap().value, 2);
        // leaf pairs see two center edges, so all three must differ
        assert_eq!(solve_cfc(&star(3)).unwrap().value, 3);
    }

    #[test]
    fn monochromatic_numbers() {
        assert_eq!(solve_mc(&path(2)).unwrap().value, 1);
        assert_eq!(solve_mc(&cycle(5)).unwrap().value, 2);
        assert_eq!(solve_mc(&complete_bipartite(2, 3)).unwrap().value, 3);
    }

    #[test]
    fn cck_values() {
        assert_eq!(solve_cck(&path(6), 3).unwrap().value, 3);
        assert_eq!(solve_cck(&star(4), 2).unwrap().value, 4);
        let all = extremal_cck_colorings(&cycle(4), 1).unwrap();
        assert_eq!(all.value, 2);
        // one color on a spanning path, a fresh color on the remaining edge
        assert_eq!(all.colorings.len(), 4);
    }

    #[test]
    fn capacity_errors() {
        assert!(matches!(
            solve_mc(&petersen()),
            Err(Error::Capacity { bound: 10, .. })
        ));
        assert!(matches!(
            solve_pc(&complete(6)),
            Err(Error::Capacity { bound: 12, .. })
        ));
        assert!(solve_cck(&path(3), 0).is_err());
    }
}
