//! Exhaustive local check of the entry-forcing claim for one copy
//! `H[i][k]` of the proper-connection variable gadget.
//!
//! The local graph is the copy itself, its left entry to a stub `L`, its
//! right entry to the next copy's first vertex `R` (with that copy's two
//! pendants `r9, r10`), and the literal edge `u8 W`. Every 2-coloring of
//! these 21 edges is tested against all pendant pairs. The entry triple of
//! a coloring is (left, right, `u7u8`).

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::pc::COPY_EDGES;

/// How paths may use the rest of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimModel {
    /// Paths stay inside the local graph.
    Confined,
    /// A path may also leave through one of `L`, `R`, `W` and come back
    /// through another; the outside part is assumed to fit any colors.
    Transit,
}

/// Per entry triple, the number of colorings that connect all pendant pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub model: ClaimModel,
    pub edges: usize,
    pub colorings: u64,
    /// Keyed by `(left, right, third)` with colors in `{1, 2}`.
    pub extensions: BTreeMap<[u8; 3], u64>,
    /// Every valid coloring as a bit mask over [`LOCAL_EDGES`]; bit set
    /// means color 2.
    pub valid: Vec<u32>,
}

impl ClaimReport {
    pub fn extensions_of(&self, triple: [u8; 3]) -> u64 {
        self.extensions.get(&triple).copied().unwrap_or(0)
    }

    /// No coloring with a non-monochromatic entry triple is valid.
    pub fn forces_monochromatic_entries(&self) -> bool {
        self.extensions
            .iter()
            .all(|(t, &count)| count == 0 || (t[0] == t[1] && t[1] == t[2]))
    }

    pub fn achievable(&self) -> Vec<[u8; 3]> {
        self.extensions
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(t, _)| *t)
            .collect()
    }
}

/// Edge order of the local graph: the copy edges, then `L u1`, `u15 R`,
/// `u8 W`, `R r9`, `R r10`.
pub const LOCAL_EDGES: usize = 21;

const PENDANTS: [&str; 8] = ["u9", "u10", "u11", "u12", "u13", "u14", "r9", "r10"];
const BOUNDARY: [&str; 3] = ["L", "R", "W"];

struct Local {
    names: Vec<String>,
    /// Real edges first, then virtual outside links.
    edges: Vec<(usize, usize)>,
    real: usize,
    left: usize,
    right: usize,
    third: usize,
}

fn add(names: &mut Vec<String>, edges: &mut Vec<(usize, usize)>, a: &str, b: &str) -> usize {
    let mut id = |x: &str| match names.iter().position(|y| y == x) {
        Some(p) => p,
        None => {
            names.push(x.to_string());
            names.len() - 1
        }
    };
    let e = (id(a), id(b));
    edges.push(e);
    edges.len() - 1
}

fn local(model: ClaimModel) -> Local {
    let mut names = Vec::new();
    let mut edges = Vec::new();
    let mut third = 0;
    for &(x, y) in &COPY_EDGES {
        let e = add(&mut names, &mut edges, &format!("u{x}"), &format!("u{y}"));
        if (x, y) == (7, 8) {
            third = e;
        }
    }
    let left = add(&mut names, &mut edges, "L", "u1");
    let right = add(&mut names, &mut edges, "u15", "R");
    add(&mut names, &mut edges, "u8", "W");
    add(&mut names, &mut edges, "R", "r9");
    add(&mut names, &mut edges, "R", "r10");
    let real = edges.len();
    if model == ClaimModel::Transit {
        for (x, a) in BOUNDARY.iter().enumerate() {
            for b in &BOUNDARY[x + 1..] {
                add(&mut names, &mut edges, a, b);
            }
        }
    }
    Local {
        names,
        edges,
        real,
        left,
        right,
        third,
    }
}

/// Every simple path from `s` to `t`, as edge sequences.
fn simple_paths(l: &Local, s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); l.names.len()];
    for (e, &(a, b)) in l.edges.iter().enumerate() {
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let mut out = Vec::new();
    let mut on = vec![false; l.names.len()];
    let mut trail = Vec::new();
    fn go(
        x: usize,
        t: usize,
        adj: &[Vec<(usize, usize)>],
        on: &mut [bool],
        trail: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if x == t {
            out.push(trail.clone());
            return;
        }
        on[x] = true;
        for &(y, e) in &adj[x] {
            if !on[y] {
                trail.push(e);
                go(y, t, adj, on, trail, out);
                trail.pop();
            }
        }
        on[x] = false;
    }
    go(s, t, &adj, &mut on, &mut trail, &mut out);
    out
}

/// A path is proper under mask `c` when every pair of consecutive real
/// edges differs; as bits, `c` must have `a xor b` set for each such pair.
fn constraints(path: &[usize], real: usize) -> Vec<(usize, usize)> {
    path.windows(2)
        .filter(|p| p[0] < real && p[1] < real)
        .map(|p| (p[0], p[1]))
        .collect()
}

/// Enumerates all `2^21` colorings and tallies valid ones by entry triple.
pub fn gadget_claim_check_pc(model: ClaimModel) -> ClaimReport {
    let l = local(model);
    let index = |x: &str| l.names.iter().position(|y| y == x).expect("pendant");
    let mut pairs: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    for (x, a) in PENDANTS.iter().enumerate() {
        for b in &PENDANTS[x + 1..] {
            let mut options: Vec<_> = simple_paths(&l, index(a), index(b))
                .iter()
                .map(|p| constraints(p, l.real))
                .collect();
            options.sort_by_key(Vec::len);
            pairs.push(options);
        }
    }
    // Pairs with the fewest alternatives fail fastest.
    pairs.sort_by_key(Vec::len);
    let total = 1u64 << l.real;
    let valid: Vec<u32> = (0..total as u32)
        .into_par_iter()
        .filter(|&c| {
            pairs.iter().all(|options| {
                options
                    .iter()
                    .any(|cons| cons.iter().all(|&(a, b)| (c >> a ^ c >> b) & 1 == 1))
            })
        })
        .collect();
    let mut tallies = [0u64; 8];
    for &c in &valid {
        let bit = |e: usize| (c >> e & 1) as usize;
        tallies[bit(l.left) << 2 | bit(l.right) << 1 | bit(l.third)] += 1;
    }
    let extensions = (0..8)
        .map(|t| {
            let triple = [
                (t >> 2 & 1) as u8 + 1,
                (t >> 1 & 1) as u8 + 1,
                (t & 1) as u8 + 1,
            ];
            (triple, tallies[t])
        })
        .collect();
    ClaimReport {
        model,
        edges: l.real,
        colorings: total,
        extensions,
        valid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_graph_shape() {
        let l = local(ClaimModel::Confined);
        assert_eq!(l.real, LOCAL_EDGES);
        assert_eq!(l.edges.len(), 21);
        assert_eq!(local(ClaimModel::Transit).edges.len(), 24);
    }

    #[test]
    fn sibling_pendants_have_one_path() {
        let l = local(ClaimModel::Transit);
        let at = |x: &str| l.names.iter().position(|y| y == x).unwrap();
        assert_eq!(simple_paths(&l, at("u9"), at("u10")).len(), 1);
        assert_eq!(simple_paths(&l, at("u13"), at("u14")).len(), 1);
    }
}
