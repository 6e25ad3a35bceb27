//! Simple undirected graphs with a stable edge index.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest vertex count accepted; distances are stored as `u16` hop counts.
pub const MAX_VERTICES: usize = u16::MAX as usize;

/// Index of an edge in the lexicographically sorted edge list of a [`Graph`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("not a subgraph: {0}")]
    NotASubgraph(String),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the
/// position of an edge in that list is its [`EdgeId`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, canonicalizing edge order. Disconnected
    /// graphs are accepted; see [`Graph::connected_from_edges`].
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adjacency })
    }

    /// Like [`Graph::from_edges`] but rejects disconnected input.
    pub fn connected_from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let g = Self::from_edges(n, pairs)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Looks up the id of edge `ab`, in either orientation.
    pub fn edge_id(&self, a: usize, b: usize) -> Option<EdgeId> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// All elements of `V(G) ∪ E(G)`: vertices by index, then edges by id.
    pub fn elements(&self) -> impl Iterator<Item = MixedElement> + '_ {
        (0..self.n)
            .map(MixedElement::Vertex)
            .chain((0..self.m()).map(MixedElement::Edge))
    }

    /// Vertices reachable from `start`, as a membership mask.
    pub fn reachable_from(&self, start: usize, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if start >= self.n || removed.get(start).copied().unwrap_or(false) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if !seen[y] && !removed.get(y).copied().unwrap_or(false) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Connectivity test; the empty graph and `K1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reachable_from(0, &[]).into_iter().all(|b| b)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &pairs).expect("permutation preserves simplicity")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A vertex or an edge of a graph; the ground set of the mixed problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedElement {
    Vertex(usize),
    Edge(EdgeId),
}

impl MixedElement {
    pub fn is_vertex(self) -> bool {
        matches!(self, MixedElement::Vertex(_))
    }

    /// Column of this element in a signature row of a graph with `n` vertices.
    pub fn column(self, n: usize) -> usize {
        match self {
            MixedElement::Vertex(v) => v,
            MixedElement::Edge(e) => n + e,
        }
    }

    /// True when one element is a vertex and the other an edge incident to it.
    pub fn incident(self, other: MixedElement, g: &Graph) -> bool {
        match (self, other) {
            (MixedElement::Vertex(v), MixedElement::Edge(e)) | (MixedElement::Edge(e), MixedElement::Vertex(v)) => {
                let (a, b) = g.edge(e);
                v == a || v == b
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn four_cycle_is_two_regular() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.edge_id(3, 2), Some(3));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 0), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        );
        assert_eq!(Graph::connected_from_edges(3, &[(0, 1)]), Err(GraphError::Disconnected));
        assert!(matches!(
            Graph::from_edges(70_000, &[]),
            Err(GraphError::TooManyVertices(_))
        ));
    }

    #[test]
    fn element_columns() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let cols: Vec<_> = g.elements().map(|x| x.column(g.n())).collect();
        assert_eq!(cols, vec![0, 1, 2, 3, 4]);
        assert!(MixedElement::Vertex(1).incident(MixedElement::Edge(0), &g));
        assert!(!MixedElement::Vertex(2).incident(MixedElement::Edge(0), &g));
    }
}
