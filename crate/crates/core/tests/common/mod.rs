#![allow(dead_code)]

use iasi_core::audit::{random_graph, EDGE_PERCENTS};
use iasi_core::Graph;

/// Every subset of vertices as a bitmask, keeping the independent ones.
pub fn independent_sets(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 20, "brute force is for small graphs");
    let edges: Vec<(usize, usize)> = g.edge_indices().to_vec();
    (0u32..1 << n)
        .filter(|s| {
            edges
                .iter()
                .all(|&(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0)
        })
        .collect()
}

pub fn uncovered(g: &Graph, s: u32) -> usize {
    g.edge_indices()
        .iter()
        .filter(|&&(a, b)| s >> a & 1 == 0 && s >> b & 1 == 0)
        .count()
}

/// Minimum uncovered edges over all independent sets.
pub fn brute_phi(g: &Graph) -> usize {
    independent_sets(g)
        .into_iter()
        .map(|s| uncovered(g, s))
        .min()
        .unwrap()
}

fn sum_masks(a: u32, b: u32) -> u32 {
    (0..32)
        .filter(|i| a >> i & 1 == 1)
        .fold(0, |acc, i| acc | b << i)
}

/// Minimum mono-indexed edges over all weak set-indexers whose labels are
/// subsets of {0..4} with at most two elements. Independent of the solver
/// and of the constructor; meant for graphs on at most four vertices.
pub fn brute_phi_by_labeling(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 4);
    let labels: Vec<u32> = (1u32..32).filter(|m| m.count_ones() <= 2).collect();
    let edges = g.edge_indices();
    let mut best = usize::MAX;
    let mut choice = vec![0usize; n];
    loop {
        let f: Vec<u32> = choice.iter().map(|&c| labels[c]).collect();
        let mut distinct = f.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == n {
            let sums: Vec<u32> = edges.iter().map(|&(a, b)| sum_masks(f[a], f[b])).collect();
            let mut ds = sums.clone();
            ds.sort();
            ds.dedup();
            let weak = edges
                .iter()
                .zip(&sums)
                .all(|(&(a, b), s)| s.count_ones() == f[a].count_ones().max(f[b].count_ones()));
            if ds.len() == sums.len() && weak {
                best = best.min(sums.iter().filter(|s| s.count_ones() == 1).count());
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            choice[i] += 1;
            if choice[i] < labels.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `count` seeded random graphs with 1 to `max_n` vertices.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = 1 + i % max_n;
            let p = EDGE_PERCENTS[(i / max_n) % EDGE_PERCENTS.len()];
            random_graph(n, p, seed.wrapping_add(i as u64))
        })
        .collect()
}

/// Two-colouring by search, separate from the library's.
pub fn brute_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|c| {
        g.edge_indices()
            .iter()
            .all(|&(a, b)| (c >> a & 1) != (c >> b & 1))
    })
}
