//! Structural invariants: leaves, cyclomatic number, vertex connectivity and
//! isometric subgraphs.

use std::collections::VecDeque;

use crate::combinations::Combinations;
use crate::graph::{Graph, GraphError};

/// Number of degree-one vertices, `L1(G)`.
pub fn leaf_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}

/// `c(G) = m - n + 1` for a connected graph.
pub fn cyclomatic_number(g: &Graph) -> usize {
    (g.m() + 1).saturating_sub(g.n())
}

/// Vertex connectivity via unit-capacity max flow on the vertex-split network.
///
/// Complete graphs return `n - 1`. Graphs with fewer than two vertices return 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    best
}

/// Vertex connectivity by trying vertex subsets in order of increasing size.
/// Exponential; intended as a cross-check on small graphs.
pub fn vertex_connectivity_by_cuts(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    for k in 0..n.saturating_sub(1) {
        for cut in Combinations::new(n, k) {
            let mut removed = vec![false; n];
            for &v in &cut {
                removed[v] = true;
            }
            let start = (0..n).find(|&v| !removed[v]).expect("at least two vertices remain");
            let seen = g.reachable_from(start, &removed);
            if (0..n).any(|v| !removed[v] && !seen[v]) {
                return k;
            }
        }
    }
    n - 1
}

/// Maximum number of internally disjoint `s`-`t` paths, stopping early at `cap`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // node 2x is x_in, 2x+1 is x_out
    let n = g.n();
    let nodes = 2 * n;
    let big = n as i32;
    let mut capacity = vec![0i32; nodes * nodes];
    for x in 0..n {
        capacity[(2 * x) * nodes + 2 * x + 1] = if x == s || x == t { big } else { 1 };
    }
    for &(a, b) in g.edges() {
        capacity[(2 * a + 1) * nodes + 2 * b] = big;
        capacity[(2 * b + 1) * nodes + 2 * a] = big;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; nodes];
    while flow < cap {
        parent.fill(usize::MAX);
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if parent[y] == usize::MAX && capacity[x * nodes + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            capacity[x * nodes + y] -= 1;
            capacity[y * nodes + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Whether the subgraph `H` given by `vertices` and `edges` preserves all
/// pairwise distances of `g`. A disconnected `H` is never isometric.
pub fn is_isometric_subgraph(g: &Graph, vertices: &[usize], edges: &[(usize, usize)]) -> Result<bool, GraphError> {
    let n = g.n();
    let mut in_h = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(GraphError::NotASubgraph(format!("vertex {v} not in graph")));
        }
        in_h[v] = true;
    }
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in edges {
        if !g.has_edge(a, b) {
            return Err(GraphError::NotASubgraph(format!("edge {a}-{b} not in graph")));
        }
        if !in_h[a] || !in_h[b] {
            return Err(GraphError::NotASubgraph(format!("edge {a}-{b} leaves the vertex set")));
        }
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let host = crate::distance::DistanceTable::new(g)?;
    let mut dist = vec![usize::MAX; n];
    for &s in vertices {
        dist.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if vertices.iter().any(|&t| dist[t] != host.vv(s, t) as usize) {
            return Ok(false);
        }
    }
    Ok(true)
}
