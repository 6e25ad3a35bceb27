//! Enclosure of element pairs by shortest paths between generator vertices.
//!
//! An element lies on a walk as a vertex or as a traversed edge. A walk
//! `s -> x -> y -> t` that visits the elements in that order and has length
//! `d(s, t)` is a shortest path, so membership reduces to distance sums over
//! every orientation of the edges involved.

use crate::distance::DistanceTable;
use crate::graph::MixedElement;

/// Entry and exit vertex pairs for walking through `x`, and its length.
fn traversals(dt: &DistanceTable, x: MixedElement) -> ([(usize, usize); 2], usize, u16) {
    let (a, b) = dt.ends(x);
    match x {
        MixedElement::Vertex(_) => ([(a, a), (a, a)], 1, 0),
        MixedElement::Edge(_) => ([(a, b), (b, a)], 2, 1),
    }
}

/// True if `x` lies on some shortest `s`-`t` path.
pub fn on_geodesic(dt: &DistanceTable, s: usize, t: usize, x: MixedElement) -> bool {
    let target = dt.vv(s, t);
    let (ways, count, len) = traversals(dt, x);
    ways[..count]
        .iter()
        .any(|&(enter, exit)| dt.vv(s, enter) + len + dt.vv(exit, t) == target)
}

/// True if `x` and `y` lie together on some shortest `s`-`t` path.
pub fn on_common_geodesic(dt: &DistanceTable, s: usize, t: usize, x: MixedElement, y: MixedElement) -> bool {
    let target = dt.vv(s, t);
    let ordered = |first: MixedElement, second: MixedElement| {
        let (fw, fc, fl) = traversals(dt, first);
        let (sw, sc, sl) = traversals(dt, second);
        fw[..fc].iter().any(|&(f_in, f_out)| {
            sw[..sc]
                .iter()
                .any(|&(s_in, s_out)| dt.vv(s, f_in) + fl + dt.vv(f_out, s_in) + sl + dt.vv(s_out, t) == target)
        })
    };
    ordered(x, y) || ordered(y, x)
}

/// Some shortest path between two vertices of `set` contains both elements.
pub fn enclosed(dt: &DistanceTable, set: &[usize], x: MixedElement, x2: MixedElement) -> bool {
    set.iter().enumerate().any(|(i, &s)| {
        set[i + 1..]
            .iter()
            .any(|&t| s != t && on_common_geodesic(dt, s, t, x, x2))
    })
}

/// True if `y` lies on some shortest path from `s` to `target`.
///
/// A shortest path to an edge runs to a nearest endpoint and then traverses
/// the edge itself.
pub fn on_path_to(dt: &DistanceTable, s: usize, target: MixedElement, y: MixedElement) -> bool {
    match target {
        MixedElement::Vertex(t) => on_geodesic(dt, s, t, y),
        MixedElement::Edge(e) => {
            let (a, b) = dt.edge(e);
            let d = dt.ve(s, e);
            [(a, b), (b, a)].into_iter().any(|(near, far)| {
                dt.vv(s, near) == d && (on_geodesic(dt, s, near, y) || y == MixedElement::Vertex(far))
            })
        }
    }
}

/// Some `s` in `set` has a shortest path to one element passing the other.
pub fn half_enclosed(dt: &DistanceTable, set: &[usize], x: MixedElement, x2: MixedElement) -> bool {
    set.iter()
        .any(|&s| on_path_to(dt, s, x, x2) || on_path_to(dt, s, x2, x))
}
