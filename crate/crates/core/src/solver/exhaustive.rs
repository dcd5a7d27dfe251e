//! Enumeration of independent sets in lexicographic order of their sorted
//! member sequences.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const WORD_LIMIT: usize = 64;

struct Enumerator<'a, F> {
    n: usize,
    closed_nbhd: Vec<u64>,
    degree: &'a [usize],
    visit: F,
}

impl<F: FnMut(u64, usize)> Enumerator<'_, F> {
    // Pre-order DFS: a set is visited before all of its extensions, and
    // extensions by smaller vertices come first.
    fn walk(&mut self, start: usize, chosen: u64, blocked: u64, covered: usize) {
        (self.visit)(chosen, covered);
        for j in start..self.n {
            if blocked >> j & 1 == 0 {
                self.walk(
                    j + 1,
                    chosen | 1 << j,
                    blocked | self.closed_nbhd[j],
                    covered + self.degree[j],
                );
            }
        }
    }
}

/// Calls `visit(set, uncovered_edges)` for every independent set of `g`,
/// in lexicographic order. Requires at most 64 vertices.
pub(crate) fn for_each_independent_set(g: &Graph, mut visit: impl FnMut(u64, usize)) -> Result<()> {
    let n = g.vertex_count();
    if n > WORD_LIMIT {
        return Err(Error::TooLarge {
            vertices: n,
            cap: WORD_LIMIT,
        });
    }
    let closed_nbhd: Vec<u64> = (0..n)
        .map(|i| g.neighbors(i).iter().fold(1u64 << i, |m, &j| m | 1 << j))
        .collect();
    let degree: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let m = g.edge_count();
    let mut e = Enumerator {
        n,
        closed_nbhd,
        degree: &degree,
        visit: |set, covered| visit(set, m - covered),
    };
    e.walk(0, 0, 0, 0);
    Ok(())
}

/// Minimum uncovered-edge count and the lexicographically smallest
/// independent set attaining it.
pub(crate) fn minimize(g: &Graph, cap: usize) -> Result<(usize, u64)> {
    let n = g.vertex_count();
    if n > cap.min(WORD_LIMIT) {
        return Err(Error::TooLarge {
            vertices: n,
            cap: cap.min(WORD_LIMIT),
        });
    }
    let mut best = (usize::MAX, 0u64);
    for_each_independent_set(g, |set, uncovered| {
        if uncovered < best.0 {
            best = (uncovered, set);
        }
    })?;
    Ok(best)
}
