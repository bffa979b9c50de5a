//! NAE-3SAT to proper connection number 2.
//!
//! Variable gadget `H_i` is a chain of copies `H[i][k]`, one per occurrence.
//! Each copy is the path `u1..u8` with pendants `u9, u10` at `u1`, `u11` at
//! `u5`, `u12` at `u7`, `u13, u14` at `u8`, and a vertex `u15` joined to `u4`
//! and `u7`, plus the chord `u3u7`. Consecutive copies are joined by
//! `u[k][15]u[k+1][1]`; the chain hangs between `u[i][0][0]` and `u[i][0][2]`.
//!
//! Clause gadget `I_j` has three paths `v0 v_r v_{r+4} v4`, a tail
//! `v4 v8 v11` with pendants `v9, v10` at `v8`, and literal vertices `w[j][r]`
//! adjacent to `v_r`. A positive occurrence adds the edge `u8 w`; a negative
//! occurrence identifies `w` with `u8`.

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph, VertexId};
use crate::oracles::cnf::{Assignment, Cnf3Formula};

use super::{
    edge_by_name, Builder, GadgetEntries, GadgetGraph, GadgetMeta, OccurrenceIndex, Painter,
    ReductionKind,
};

pub(crate) fn u(i: usize, k: usize, t: usize) -> String {
    format!("u[{i}][{k}][{t}]")
}

fn v(j: usize, t: usize) -> String {
    format!("v[{j}][{t}]")
}

fn w(j: usize, r: usize) -> String {
    format!("w[{j}][{r}]")
}

/// Edges of one copy `H[i][k]` as pairs of local indices.
pub(crate) const COPY_EDGES: [(usize, usize); 16] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (9, 1),
    (10, 1),
    (11, 5),
    (12, 7),
    (13, 8),
    (14, 8),
    (15, 4),
    (15, 7),
    (7, 3),
];

/// Copy edges that take the variable's own color in the certificate.
pub(crate) const OWN_COLOR: [(usize, usize); 6] = [(9, 1), (2, 3), (4, 5), (6, 7), (7, 8), (13, 8)];

fn left_entry(i: usize, k: usize) -> (String, String) {
    if k == 1 {
        (u(i, 0, 0), u(i, 1, 1))
    } else {
        (u(i, k - 1, 15), u(i, k, 1))
    }
}

fn right_entry(i: usize, k: usize, m_i: usize) -> (String, String) {
    if k == m_i {
        (u(i, k, 15), u(i, 0, 2))
    } else {
        (u(i, k, 15), u(i, k + 1, 1))
    }
}

/// Builds the graph. Entries: for `H[i][k]` the left, right and third
/// entries (`u7u8`); for `I[j]` the edges `v1w1, v2w2, v3w3, v4v8`.
/// Vertex set `S` is the clique.
pub fn build_pc_reduction(phi: &Cnf3Formula) -> Result<GadgetGraph> {
    let occ = OccurrenceIndex::new(phi)?;
    let n = phi.num_vars() as usize;
    let m = phi.num_clauses();
    let counts = occ.counts();
    let mut b = Builder::default();
    for i in 1..=n {
        let m_i = counts[i - 1];
        for k in 1..=m_i {
            for &(x, y) in &COPY_EDGES {
                b.edge(&u(i, k, x), &u(i, k, y));
            }
            if k > 1 {
                b.edge(&u(i, k - 1, 15), &u(i, k, 1));
            }
        }
        b.edge(&u(i, 0, 0), &u(i, 1, 1));
        b.edge(&u(i, m_i, 15), &u(i, 0, 2));
        b.edge(&u(i, 0, 2), &u(i, 0, 3));
        b.edge(&u(i, 0, 2), &u(i, 0, 4));
        b.edge(&u(i, 0, 1), &u(i, 0, 2));
    }
    for j in 1..=m {
        for r in 1..=3 {
            b.path(&[v(j, 0), v(j, r), v(j, r + 4), v(j, 4)]);
        }
        b.edge(&v(j, 8), &v(j, 4));
        b.edge(&v(j, 9), &v(j, 8));
        b.edge(&v(j, 10), &v(j, 8));
        b.edge(&v(j, 8), &v(j, 11));
        for r in 1..=3 {
            let (i, k) = occ.locate(j, r).expect("every slot is an occurrence");
            if occ.of(i)[k - 1].positive {
                b.edge(&u(i, k, 8), &w(j, r));
            } else {
                b.alias(&w(j, r), &u(i, k, 8));
            }
            b.edge(&v(j, r), &w(j, r));
        }
    }
    let mut s_names = Vec::with_capacity(2 * n + m + 1);
    for i in 1..=n {
        s_names.push(u(i, 0, 0));
        s_names.push(u(i, 0, 1));
    }
    for j in 1..=m {
        s_names.push(v(j, 11));
    }
    s_names.push("s".to_string());
    b.clique(&s_names);

    let (graph, roles, aliases) = b.finish()?;
    let find = |a: &str, c: &str| edge_by_name(&graph, &roles, &aliases, a, c);
    let mut entries = Vec::new();
    for i in 1..=n {
        let m_i = counts[i - 1];
        for k in 1..=m_i {
            let (a, c) = left_entry(i, k);
            let (d, e) = right_entry(i, k, m_i);
            entries.push(GadgetEntries {
                gadget: format!("H[{i}][{k}]"),
                edges: vec![
                    find(&a, &c)?,
                    find(&d, &e)?,
                    find(&u(i, k, 7), &u(i, k, 8))?,
                ],
            });
        }
    }
    for j in 1..=m {
        let mut edges = Vec::with_capacity(4);
        for r in 1..=3 {
            edges.push(find(&v(j, r), &w(j, r))?);
        }
        edges.push(find(&v(j, 4), &v(j, 8))?);
        entries.push(GadgetEntries {
            gadget: format!("I[{j}]"),
            edges,
        });
    }
    let s_set: Vec<VertexId> = s_names.iter().map(|x| roles[x]).collect();
    Ok(GadgetGraph {
        vertex_sets: [("S".to_string(), s_set)].into(),
        graph,
        roles,
        aliases,
        entries,
        meta: GadgetMeta {
            kind: ReductionKind::ProperConnection,
            num_vars: n,
            num_clauses: m,
            occurrences: counts,
        },
    })
}

/// The two-coloring of the sufficiency proof for a not-all-equal assignment.
///
/// `x_i = false` gives the variable color 1, `true` gives 2. A clique edge
/// between two vertices whose edges to `s` differ gets color 1.
pub fn pc_certificate_coloring(phi: &Cnf3Formula, a: &Assignment) -> Result<EdgeColoring> {
    phi.require_nae(a)?;
    let gadget = build_pc_reduction(phi)?;
    let occ = OccurrenceIndex::new(phi)?;
    let n = gadget.meta.num_vars;
    let m = gadget.meta.num_clauses;
    let mut p = Painter::new(&gadget);
    for i in 1..=n {
        let own: Color = if a.value(i as u32) { 2 } else { 1 };
        let other = 3 - own;
        let m_i = gadget.meta.occurrences[i - 1];
        p.set(&u(i, 0, 0), &u(i, 1, 1), own)?;
        for k in 1..=m_i {
            for &(x, y) in &COPY_EDGES {
                let c = if OWN_COLOR.contains(&(x, y)) {
                    own
                } else {
                    other
                };
                p.set(&u(i, k, x), &u(i, k, y), c)?;
            }
            let (d, e) = right_entry(i, k, m_i);
            p.set(&d, &e, own)?;
        }
        p.set(&u(i, 0, 2), &u(i, 0, 3), own)?;
        p.set(&u(i, 0, 2), &u(i, 0, 4), other)?;
        p.set(&u(i, 0, 2), &u(i, 0, 1), other)?;
        for (k, o) in occ.of(i).iter().enumerate() {
            if o.positive {
                p.set(&v(o.clause, o.slot), &w(o.clause, o.slot), own)?;
                p.set(&u(i, k + 1, 8), &w(o.clause, o.slot), other)?;
            } else {
                p.set(&v(o.clause, o.slot), &w(o.clause, o.slot), other)?;
            }
        }
    }
    for j in 1..=m {
        let lits = [
            p.get(&v(j, 1), &w(j, 1))?,
            p.get(&v(j, 2), &w(j, 2))?,
            p.get(&v(j, 3), &w(j, 3))?,
        ];
        let odd = (1..=3)
            .find(|&r| lits.iter().filter(|&&c| c == lits[r - 1]).count() == 1)
            .ok_or_else(|| {
                Error::Construction(format!("clause {j} literal edges are all equal"))
            })?;
        // Each v_r continues in the color opposite to its literal edge; the
        // tail keeps the odd color on v4v8 and v8v9.
        let maj = 3 - lits[odd - 1];
        let min = lits[odd - 1];
        for r in 1..=3 {
            let c = lits[r - 1];
            p.set(&v(j, r), &v(j, 0), 3 - c)?;
            p.set(&v(j, r), &v(j, r + 4), 3 - c)?;
            p.set(&v(j, 4), &v(j, r + 4), c)?;
        }
        p.set(&v(j, 4), &v(j, 8), min)?;
        p.set(&v(j, 8), &v(j, 9), min)?;
        p.set(&v(j, 8), &v(j, 10), maj)?;
        p.set(&v(j, 8), &v(j, 11), maj)?;
    }
    clique_colors(
        &gadget.graph,
        gadget.vertex_set("S"),
        gadget.roles["s"],
        &mut p.colors,
    )?;
    p.finish()
}

fn clique_colors(graph: &Graph, set: &[VertexId], s: VertexId, colors: &mut [Color]) -> Result<()> {
    let mut to_s = vec![0; graph.n()];
    for &x in set.iter().filter(|&&x| x != s) {
        let outside: Vec<_> = graph
            .neighbors(x)
            .iter()
            .filter(|(y, _)| !set.contains(y))
            .collect();
        let [(_, e)] = outside[..] else {
            return Err(Error::Construction(format!(
                "{} has {} neighbors outside the clique",
                graph.label(x),
                outside.len()
            )));
        };
        let c = 3 - colors[*e];
        to_s[x] = c;
        colors[graph.edge_between(x, s).expect("clique edge")] = c;
    }
    for (idx, &x) in set.iter().enumerate() {
        for &y in &set[idx + 1..] {
            if x == s || y == s {
                continue;
            }
            let c = if to_s[x] == to_s[y] { to_s[x] } else { 1 };
            colors[graph.edge_between(x, y).expect("clique edge")] = c;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifiers::properly_connected;

    fn single() -> Cnf3Formula {
        Cnf3Formula::from_dimacs(3, &[[1, 2, 3]]).unwrap()
    }

    #[test]
    fn vertex_count_and_clique() {
        let g = build_pc_reduction(&single()).unwrap();
        assert_eq!(g.graph.n(), 76);
        let s = g.vertex_set("S");
        assert_eq!(s.len(), 8);
        for (x, &a) in s.iter().enumerate() {
            for &b in &s[x + 1..] {
                assert!(g.graph.has_edge(a, b));
            }
        }
    }

    #[test]
    fn negative_occurrence_merges_vertices() {
        let phi = Cnf3Formula::from_dimacs(3, &[[1, -2, 3]]).unwrap();
        let g = build_pc_reduction(&phi).unwrap();
        assert_eq!(g.graph.n(), 75);
        assert_eq!(
            g.vertex("w[1][2]").unwrap(),
            g.vertex("u[2][1][8]").unwrap()
        );
    }

    #[test]
    fn certificate_is_proper_connected() {
        let phi = single();
        let a = Assignment::new(vec![true, false, false]);
        let f = pc_certificate_coloring(&phi, &a).unwrap();
        assert_eq!(f.num_colors(), 2);
        let verdict = properly_connected(&build_pc_reduction(&phi).unwrap().graph, &f).unwrap();
        assert!(verdict.holds, "failing pair {:?}", verdict.failing_pair);
    }

    #[test]
    fn rejects_all_equal_assignment() {
        let a = Assignment::new(vec![true, true, true]);
        assert!(matches!(
            pc_certificate_coloring(&single(), &a),
            Err(Error::UnsatisfyingAssignment(_))
        ));
    }
}
