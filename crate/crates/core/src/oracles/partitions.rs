//! Set partitions as restricted growth strings.
//!
//! A restricted growth string `a` over `m` positions has `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; it names the partition in which position `i`
//! lies in block `a[i]`. Blocks are numbered by first appearance, which is
//! exactly the color normalization used by `EdgeColoring`.

use std::ops::ControlFlow;

/// Calls `visit` on every restricted growth string of length `m` with exactly
/// `blocks` blocks, in lexicographic order. Stops early on `Break`.
pub fn for_each_partition<B>(
    m: usize,
    blocks: usize,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<B>,
) -> Option<B> {
    if blocks > m || (blocks == 0 && m > 0) {
        return None;
    }
    if m == 0 {
        return match visit(&[]) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        };
    }
    let mut rgs = vec![0u32; m];
    match extend(&mut rgs, 1, 1, blocks, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

fn extend<B>(
    rgs: &mut [u32],
    pos: usize,
    used: usize,
    blocks: usize,
    visit: &mut impl FnMut(&[u32]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let m = rgs.len();
    if pos == m {
        return if used == blocks {
            visit(rgs)
        } else {
            ControlFlow::Continue(())
        };
    }
    let remaining = m - pos;
    for value in 0..=used.min(blocks - 1) {
        let now_used = if value == used { used + 1 } else { used };
        if now_used + remaining - 1 < blocks {
            continue;
        }
        rgs[pos] = value as u32;
        extend(rgs, pos + 1, now_used, blocks, visit)?;
    }
    ControlFlow::Continue(())
}

/// Stirling number of the second kind, for sanity checks.
pub fn stirling2(m: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..m {
        for j in (1..=k).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}
