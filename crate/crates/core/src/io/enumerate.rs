//! Isomorph-free generation of small connected graphs.
//!
//! Every connected graph on `n` vertices arises from a connected graph on
//! `n - 1` vertices by adding a vertex adjacent to a nonempty subset (delete
//! any non-cut vertex to see this). Candidates are deduplicated through a
//! canonical code: the smallest upper-triangle bit string over all labelings
//! that list vertices by non-increasing degree.

use std::collections::HashMap;

use super::IoError;
use crate::graph::Graph;

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUMERATE_N: usize = 7;

/// Bit index of pair `(i, j)`, `i < j`, in graph6 order.
fn pair_bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

/// Canonical code of a graph on at most 11 vertices, plus the relabeling
/// (`perm[old] = new`) that attains it.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= 11, "canonical codes are packed into 64 bits");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // positions sharing a degree may be filled by any vertex of that degree
    let slot_degree: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    let mut best = (u64::MAX, Vec::new());
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        g: &Graph,
        slot: usize,
        slot_degree: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut (u64, Vec<usize>),
    ) {
        let n = g.n();
        if slot == n {
            let code = g.edges().iter().fold(0u64, |acc, &(a, b)| {
                let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                acc | 1u64 << pair_bit(x, y)
            });
            if code < best.0 {
                *best = (code, perm.clone());
            }
            return;
        }
        for v in 0..n {
            if !used[v] && g.degree(v) == slot_degree[slot] {
                used[v] = true;
                perm[v] = slot;
                assign(g, slot + 1, slot_degree, perm, used, best);
                used[v] = false;
            }
        }
    }
    if n == 0 {
        return (0, Vec::new());
    }
    assign(g, 0, &slot_degree, &mut perm, &mut used, &mut best);
    best
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, canonically labeled, ordered by edge count and then code.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, IoError> {
    if n > MAX_ENUMERATE_N {
        return Err(IoError::NTooLarge(n));
    }
    let mut level: Vec<Graph> = if n == 0 {
        Vec::new()
    } else {
        vec![Graph::from_edges(1, &[]).expect("K1")]
    };
    for order in 2..=n {
        let mut seen: HashMap<u64, Graph> = HashMap::new();
        let old = order - 1;
        for base in &level {
            for mask in 1u32..(1 << old) {
                let mut pairs = base.edges().to_vec();
                pairs.extend((0..old).filter(|&v| mask >> v & 1 == 1).map(|v| (v, old)));
                let g = Graph::from_edges(order, &pairs).expect("new vertex adds fresh edges");
                let (code, perm) = canonical_form(&g);
                seen.entry(code).or_insert_with(|| g.permuted(&perm));
            }
        }
        let mut next: Vec<(usize, u64, Graph)> = seen.into_iter().map(|(c, g)| (g.m(), c, g)).collect();
        next.sort_by_key(|&(m, code, _)| (m, code));
        level = next.into_iter().map(|(_, _, g)| g).collect();
    }
    Ok(level.into_iter())
}
