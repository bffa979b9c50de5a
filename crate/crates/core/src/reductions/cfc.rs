//! NAE-3SAT to conflict-free connection number 2 on graphs with `h(G) = 2`.
//!
//! Variable gadget: `K4` on `t3..t6`, pendants `t7, t8` at `t6`, and the
//! 5-cycle `t0 t1 t3 t4 t2`. Clause gadget: three blocks `u, v, w`, each a
//! `K4` on `X0..X3` with pendants `X4, X5` at `X3`, and the triangle on the
//! hubs `u0, v0, w0`. Slot `r` joins hub `r` to `t1` (positive) or `t2`
//! (negative). The `t[i][0]` and `s0` form a clique; `s0 s1 s2` is a path.

use crate::error::{Error, Result};
use crate::graph::EdgeColoring;
use crate::oracles::cnf::{Assignment, Cnf3Formula};
use crate::oracles::hamilton::double_hamilton_paths;

use super::{
    edge_by_name, Builder, GadgetEntries, GadgetGraph, GadgetMeta, OccurrenceIndex, Painter,
    ReductionKind,
};

pub(crate) const BLOCKS: [&str; 3] = ["u", "v", "w"];

fn t(i: usize, x: usize) -> String {
    format!("t[{i}][{x}]")
}

fn x(block: &str, j: usize, y: usize) -> String {
    format!("{block}[{j}][{y}]")
}

fn attach(positive: bool) -> usize {
    if positive {
        1
    } else {
        2
    }
}

fn clique_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| t(i, 0)).chain(["s0".to_string()]).collect()
}

/// Builds the graph. Entries of `I[j]` are the hub edges of slots 1, 2, 3.
/// Vertex set `clique` holds every `t[i][0]` and `s0`.
pub fn build_cfc_reduction(phi: &Cnf3Formula) -> Result<GadgetGraph> {
    let occ = OccurrenceIndex::new(phi)?;
    let n = phi.num_vars() as usize;
    let m = phi.num_clauses();
    let mut b = Builder::default();
    for i in 1..=n {
        b.clique(&[t(i, 3), t(i, 4), t(i, 5), t(i, 6)]);
        b.edge(&t(i, 7), &t(i, 6));
        b.edge(&t(i, 8), &t(i, 6));
        b.edge(&t(i, 0), &t(i, 1));
        b.edge(&t(i, 1), &t(i, 3));
        b.edge(&t(i, 4), &t(i, 2));
        b.edge(&t(i, 2), &t(i, 0));
    }
    for j in 1..=m {
        for block in BLOCKS {
            b.clique(&[
                x(block, j, 0),
                x(block, j, 1),
                x(block, j, 2),
                x(block, j, 3),
            ]);
            b.edge(&x(block, j, 4), &x(block, j, 3));
            b.edge(&x(block, j, 5), &x(block, j, 3));
        }
        b.edge(&x("u", j, 0), &x("v", j, 0));
        b.edge(&x("v", j, 0), &x("w", j, 0));
        b.edge(&x("u", j, 0), &x("w", j, 0));
        for (r, block) in BLOCKS.iter().enumerate() {
            let (i, k) = occ.locate(j, r + 1).expect("every slot is an occurrence");
            let o = occ.of(i)[k - 1];
            b.edge(&x(block, j, 0), &t(i, attach(o.positive)));
        }
    }
    let clique = clique_names(n);
    b.clique(&clique);
    b.path(&["s0".to_string(), "s1".to_string(), "s2".to_string()]);

    let (graph, roles, aliases) = b.finish()?;
    let mut entries = Vec::with_capacity(m);
    for j in 1..=m {
        let mut edges = Vec::with_capacity(3);
        for (r, block) in BLOCKS.iter().enumerate() {
            let (i, k) = occ.locate(j, r + 1).expect("every slot is an occurrence");
            let target = t(i, attach(occ.of(i)[k - 1].positive));
            edges.push(edge_by_name(
                &graph,
                &roles,
                &aliases,
                &x(block, j, 0),
                &target,
            )?);
        }
        entries.push(GadgetEntries {
            gadget: format!("I[{j}]"),
            edges,
        });
    }
    let clique_set = clique.iter().map(|c| roles[c]).collect();
    Ok(GadgetGraph {
        vertex_sets: [("clique".to_string(), clique_set)].into(),
        graph,
        roles,
        aliases,
        entries,
        meta: GadgetMeta {
            kind: ReductionKind::ConflictFree,
            num_vars: n,
            num_clauses: m,
            occurrences: occ.counts(),
        },
    })
}

/// The two-coloring of the sufficiency proof. Complete blocks of order at
/// least four get two edge-disjoint Hamilton paths in colors 1 and 2; clique
/// edges on neither path get color 1.
pub fn cfc_certificate_coloring(phi: &Cnf3Formula, a: &Assignment) -> Result<EdgeColoring> {
    phi.require_nae(a)?;
    let gadget = build_cfc_reduction(phi)?;
    let n = gadget.meta.num_vars;
    let m = gadget.meta.num_clauses;
    let mut p = Painter::new(&gadget);

    for i in 1..=n {
        let (c1, c2) = if a.value(i as u32) { (2, 1) } else { (1, 2) };
        for (hub, c) in [(1, c1), (2, c2)] {
            let center = gadget.vertex(&t(i, hub))?;
            for &(_, e) in gadget.graph.neighbors(center) {
                p.colors[e] = c;
            }
        }
        hamilton_pair(&mut p, &[t(i, 3), t(i, 4), t(i, 5), t(i, 6)])?;
        p.set(&t(i, 7), &t(i, 6), 1)?;
        p.set(&t(i, 8), &t(i, 6), 2)?;
    }
    for j in 1..=m {
        let entries = gadget
            .entries_of(&format!("I[{j}]"))
            .expect("clause entries");
        let seen = [
            p.colors[entries[0]],
            p.colors[entries[1]],
            p.colors[entries[2]],
        ];
        let odd = (0..3)
            .find(|&r| seen.iter().filter(|&&c| c == seen[r]).count() == 1)
            .ok_or_else(|| Error::Construction(format!("entries of clause {j} share one color")))?;
        let maj = 3 - seen[odd];
        let mut pair = (0..3).filter(|&r| r != odd);
        let (q1, q2) = (pair.next().unwrap(), pair.next().unwrap());
        let hub = |r: usize| x(BLOCKS[r], j, 0);
        p.set(&hub(q1), &hub(q2), seen[odd])?;
        p.set(&hub(q1), &hub(odd), seen[odd])?;
        p.set(&hub(q2), &hub(odd), maj)?;
        for block in BLOCKS {
            hamilton_pair(
                &mut p,
                &[
                    x(block, j, 0),
                    x(block, j, 1),
                    x(block, j, 2),
                    x(block, j, 3),
                ],
            )?;
            p.set(&x(block, j, 4), &x(block, j, 3), 1)?;
            p.set(&x(block, j, 5), &x(block, j, 3), 2)?;
        }
    }
    let clique = clique_names(n);
    for (idx, a) in clique.iter().enumerate() {
        for b in &clique[idx + 1..] {
            p.set(a, b, 1)?;
        }
    }
    hamilton_pair(&mut p, &clique)?;
    p.set("s0", "s1", 1)?;
    p.set("s1", "s2", 2)?;
    p.finish()
}

fn hamilton_pair(p: &mut Painter<'_>, names: &[String]) -> Result<()> {
    let (p1, p2) = double_hamilton_paths(names.len())?;
    for (path, c) in [(p1, 1), (p2, 2)] {
        for w in path.windows(2) {
            p.set(&names[w[0]], &names[w[1]], c)?;
        }
    }
    Ok(())
}
