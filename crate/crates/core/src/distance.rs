//! All-pairs vertex and vertex-edge distances.

use std::collections::VecDeque;

use crate::graph::{EdgeId, Graph, GraphError, MixedElement};

/// Precomputed hop counts `d(s, x)` for every vertex `s` and every element `x`.
///
/// Row `s` is the signature of `s`: distances to all vertices by index followed
/// by distances to all edges by [`EdgeId`].
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    m: usize,
    rows: Vec<u16>,
    edges: Vec<(usize, usize)>,
}

impl DistanceTable {
    /// Runs one BFS per vertex. Fails on disconnected graphs.
    pub fn new(g: &Graph) -> Result<Self, GraphError> {
        let n = g.n();
        let m = g.m();
        let width = n + m;
        let mut rows = vec![0u16; n * width];
        let mut dist = vec![u16::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            dist.fill(u16::MAX);
            dist[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if dist[y] == u16::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist.contains(&u16::MAX) {
                return Err(GraphError::Disconnected);
            }
            let row = &mut rows[s * width..(s + 1) * width];
            row[..n].copy_from_slice(&dist);
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                row[n + e] = dist[a].min(dist[b]);
            }
        }
        Ok(DistanceTable {
            n,
            m,
            rows,
            edges: g.edges().to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of elements, `n + m`.
    pub fn width(&self) -> usize {
        self.n + self.m
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// Signature row of vertex `s`.
    pub fn row(&self, s: usize) -> &[u16] {
        let w = self.width();
        &self.rows[s * w..(s + 1) * w]
    }

    pub fn vv(&self, a: usize, b: usize) -> u16 {
        self.rows[a * self.width() + b]
    }

    pub fn ve(&self, s: usize, e: EdgeId) -> u16 {
        self.rows[s * self.width() + self.n + e]
    }

    /// `d(s, x)` for any element `x`.
    pub fn dist(&self, s: usize, x: MixedElement) -> u16 {
        self.rows[s * self.width() + x.column(self.n)]
    }

    pub fn diameter(&self) -> u16 {
        (0..self.n)
            .flat_map(|s| self.row(s)[..self.n].iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Endpoints of an element, as the path it occupies: `(a, a)` for a vertex.
    pub(crate) fn ends(&self, x: MixedElement) -> (usize, usize) {
        match x {
            MixedElement::Vertex(v) => (v, v),
            MixedElement::Edge(e) => self.edges[e],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn four_cycle_distances() {
        let g = c4();
        let dt = DistanceTable::new(&g).unwrap();
        assert_eq!(dt.vv(0, 2), 2);
        let e23 = g.edge_id(2, 3).unwrap();
        assert_eq!(dt.ve(0, e23), 1);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            assert_eq!(dt.ve(a, e), 0);
            assert_eq!(dt.ve(b, e), 0);
        }
        assert_eq!(dt.diameter(), 2);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(DistanceTable::new(&g), Err(GraphError::Disconnected)));
    }
}
