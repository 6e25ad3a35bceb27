//! Resolvability predicates over a [`DistanceTable`].

use serde::Serialize;

use crate::distance::DistanceTable;
use crate::graph::MixedElement;

/// Which pairs of elements a generator has to tell apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// All pairs of `V(G) ∪ E(G)`.
    Mixed,
    /// Pairs of vertices.
    VertexOnly,
    /// Pairs of edges.
    EdgeOnly,
}

impl Variant {
    /// Signature columns relevant to this variant.
    pub fn columns(self, n: usize, m: usize) -> std::ops::Range<usize> {
        match self {
            Variant::Mixed => 0..n + m,
            Variant::VertexOnly => 0..n,
            Variant::EdgeOnly => n..n + m,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Mixed => "mixed",
            Variant::VertexOnly => "vertex",
            Variant::EdgeOnly => "edge",
        }
    }
}

/// Distance row of a vertex, read through the lens of a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature<'a>(&'a [u16]);

impl<'a> Signature<'a> {
    pub fn of(dt: &'a DistanceTable, s: usize, variant: Variant) -> Self {
        Signature(&dt.row(s)[variant.columns(dt.n(), dt.m())])
    }

    pub fn as_slice(&self) -> &'a [u16] {
        self.0
    }
}

/// `s` distinguishes `x` and `x2` when `d(s, x) != d(s, x2)`.
pub fn distinguishes(dt: &DistanceTable, s: usize, x: MixedElement, x2: MixedElement) -> bool {
    dt.dist(s, x) != dt.dist(s, x2)
}

/// Checks a candidate generator, returning one undistinguished pair on failure.
///
/// Each element is mapped to its vector of distances to `set`; the set is a
/// generator iff these vectors are pairwise distinct, which one sort decides.
pub fn find_unresolved_pair(
    dt: &DistanceTable,
    set: &[usize],
    variant: Variant,
) -> Option<(MixedElement, MixedElement)> {
    let n = dt.n();
    let columns: Vec<usize> = variant.columns(n, dt.m()).collect();
    let rows: Vec<&[u16]> = set.iter().map(|&s| dt.row(s)).collect();
    let key = |c: usize| rows.iter().map(move |r| r[c]);
    let mut order = columns;
    order.sort_by(|&a, &b| key(a).cmp(key(b)));
    order
        .windows(2)
        .find(|w| key(w[0]).eq(key(w[1])))
        .map(|w| (column_element(w[0], n), column_element(w[1], n)))
}

fn column_element(c: usize, n: usize) -> MixedElement {
    if c < n {
        MixedElement::Vertex(c)
    } else {
        MixedElement::Edge(c - n)
    }
}

pub fn is_generator(dt: &DistanceTable, set: &[usize], variant: Variant) -> bool {
    !set.is_empty() && find_unresolved_pair(dt, set, variant).is_none()
}

pub fn is_mixed_generator(dt: &DistanceTable, set: &[usize]) -> bool {
    is_generator(dt, set, Variant::Mixed)
}

pub fn is_vertex_generator(dt: &DistanceTable, set: &[usize]) -> bool {
    is_generator(dt, set, Variant::VertexOnly)
}

pub fn is_edge_generator(dt: &DistanceTable, set: &[usize]) -> bool {
    is_generator(dt, set, Variant::EdgeOnly)
}
