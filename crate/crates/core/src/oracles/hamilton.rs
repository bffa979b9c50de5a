//! Two edge-disjoint Hamilton paths in a complete graph.

use crate::error::{Error, Result};

/// Two edge-disjoint Hamilton paths of `K_n` on vertices `0..n`.
///
/// Starts from `0-1-2-3` and `1-3-0-2` on four vertices. Each new vertex `v`
/// is appended to the end of the first path and joined to an end of the
/// second path other than `v - 1`, so the two new edges are distinct.
pub fn double_hamilton_paths(n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "two edge-disjoint Hamilton paths need at least 4 vertices, got {n}"
        )));
    }
    let mut first = vec![0, 1, 2, 3];
    let mut second = vec![1, 3, 0, 2];
    for v in 4..n {
        let tail = *first.last().unwrap();
        first.push(v);
        if *second.last().unwrap() != tail {
            second.push(v);
        } else {
            second.insert(0, v);
        }
    }
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn edge_set(path: &[usize]) -> HashSet<(usize, usize)> {
        path.windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    #[test]
    fn four_vertices() {
        let (p1, p2) = double_hamilton_paths(4).unwrap();
        assert_eq!(p1, vec![0, 1, 2, 3]);
        assert_eq!(p2, vec![1, 3, 0, 2]);
    }

    #[test]
    fn disjoint_and_hamiltonian() {
        for n in 4..=40 {
            let (p1, p2) = double_hamilton_paths(n).unwrap();
            for p in [&p1, &p2] {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..n).collect::<Vec<_>>());
            }
            let (a, b) = (edge_set(&p1), edge_set(&p2));
            assert_eq!(a.len(), n - 1);
            assert!(a.is_disjoint(&b), "n={n}");
        }
    }

    #[test]
    fn too_small() {
        assert!(double_hamilton_paths(3).is_err());
    }
}
