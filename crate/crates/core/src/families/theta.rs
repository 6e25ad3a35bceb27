//! Theta graphs: two degree-3 vertices joined by three internally disjoint paths.

use serde::Serialize;

use super::FamilyError;
use crate::distance::DistanceTable;
use crate::graph::Graph;

/// Lengths, in edges, of the three `u`-`v` paths, kept sorted `a <= b <= c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaSpec {
    a: usize,
    b: usize,
    c: usize,
}

impl ThetaSpec {
    /// Sorts the lengths and rejects specs that would need a multi-edge.
    pub fn new(x: usize, y: usize, z: usize) -> Result<Self, FamilyError> {
        let mut lens = [x, y, z];
        lens.sort_unstable();
        let [a, b, c] = lens;
        if a < 1 || b < 2 {
            return Err(FamilyError::InvalidSpec(format!(
                "theta lengths ({x},{y},{z}): need a >= 1 and b >= 2"
            )));
        }
        Ok(ThetaSpec { a, b, c })
    }

    pub fn lengths(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    pub fn vertex_count(&self) -> usize {
        self.a + self.b + self.c - 1
    }

    pub fn edge_count(&self) -> usize {
        self.a + self.b + self.c
    }

    /// Lengths differ by at most one.
    pub fn is_balanced(&self) -> bool {
        self.c - self.a <= 1
    }

    /// Every valid spec with `a + b + c <= max_total`, in lexicographic order.
    pub fn all_up_to(max_total: usize) -> Vec<ThetaSpec> {
        let mut out = Vec::new();
        for a in 1..=max_total {
            for b in a.max(2)..=max_total {
                for c in b..=max_total {
                    if a + b + c <= max_total {
                        out.push(ThetaSpec { a, b, c });
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "theta({},{},{})", self.a, self.b, self.c)
    }
}

pub fn is_balanced(spec: &ThetaSpec) -> bool {
    spec.is_balanced()
}

#[derive(Debug, Clone)]
pub struct ThetaGraph {
    pub spec: ThetaSpec,
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    /// The three paths as vertex sequences from `u` to `v`, shortest first.
    pub paths: [Vec<usize>; 3],
}

impl ThetaGraph {
    /// Internal vertices of path `i`.
    pub fn internal(&self, i: usize) -> &[usize] {
        let p = &self.paths[i];
        &p[1..p.len() - 1]
    }
}

/// Builds the theta graph with `u = 0`, `v = 1` and the internal vertices of
/// the three paths numbered consecutively from 2.
pub fn theta(spec: ThetaSpec) -> Result<ThetaGraph, FamilyError> {
    let (u, v) = (0, 1);
    let mut next = 2;
    let mut pairs = Vec::with_capacity(spec.edge_count());
    let paths = spec.lengths().map(|len| {
        let mut p = vec![u];
        p.extend(next..next + len - 1);
        next += len - 1;
        p.push(v);
        pairs.extend(p.windows(2).map(|w| (w[0], w[1])));
        p
    });
    let graph = Graph::connected_from_edges(spec.vertex_count(), &pairs)?;
    Ok(ThetaGraph {
        spec,
        graph,
        u,
        v,
        paths,
    })
}

/// Positions at maximal distance `floor(len / 2)` from `position` on a cycle
/// of length `len`: one on even cycles, two on odd ones.
pub fn antipodal_vertices(len: usize, position: usize) -> Vec<usize> {
    assert!(len >= 3, "cycle length must be at least 3");
    let mut out = vec![(position + len / 2) % len];
    if len % 2 == 1 {
        out.push((position + len / 2 + 1) % len);
    }
    out.sort_unstable();
    out
}

/// `{u, v, w, z}` with `w`, `z` the neighbours of `v` on the two longest paths.
///
/// Taking a neighbour on a shorter path does not work in general: on
/// theta(2,3,3), `{u, v}` plus the neighbours of `v` on the two shorter paths
/// leaves `u` and the first edge of the long path unresolved.
pub fn balanced_theta_generator(t: &ThetaGraph) -> Result<Vec<usize>, FamilyError> {
    if !t.spec.is_balanced() {
        return Err(FamilyError::NotBalanced(t.spec));
    }
    let mut set = vec![t.u, t.v];
    set.extend(t.paths[1..].iter().map(|p| p[p.len() - 2]));
    set.sort_unstable();
    Ok(set)
}

/// `{a_u, a_v, w}`: the antipodes of `u` and `v` on the cycle formed by the
/// shortest and longest paths, and the middle vertex of the remaining path.
pub fn unbalanced_theta_generator(t: &ThetaGraph) -> Result<Vec<usize>, FamilyError> {
    if t.spec.is_balanced() {
        return Err(FamilyError::Balanced(t.spec));
    }
    let dt = DistanceTable::new(&t.graph)?;
    let (short, long) = (&t.paths[0], &t.paths[2]);
    // cycle u -> (shortest path) -> v -> (longest path backwards) -> u
    let mut ring: Vec<usize> = short.clone();
    ring.extend(long[1..long.len() - 1].iter().rev());
    let pos_v = short.len() - 1;

    let pick = |pos: usize, other: usize| {
        antipodal_vertices(ring.len(), pos)
            .into_iter()
            .map(|p| ring[p])
            .min_by_key(|&x| (dt.vv(other, x), x))
            .expect("at least one antipode")
    };
    let a_u = pick(0, t.v);
    let a_v = pick(pos_v, t.u);

    let w = t
        .internal(1)
        .iter()
        .copied()
        .find(|&x| {
            let (du, dv) = (dt.vv(x, t.u), dt.vv(x, t.v));
            du >= dv && du - dv <= 1
        })
        .expect("the middle path has a middle vertex");

    let mut set = vec![a_u, a_v, w];
    set.sort_unstable();
    Ok(set)
}

/// Recovers the spec of a theta graph given in arbitrary labeling, together
/// with its two branch vertices.
pub fn recognize_theta(g: &Graph) -> Option<(ThetaSpec, usize, usize)> {
    let n = g.n();
    let branch: Vec<usize> = (0..n).filter(|&x| g.degree(x) != 2).collect();
    if branch.len() != 2 || branch.iter().any(|&x| g.degree(x) != 3) || !g.is_connected() {
        return None;
    }
    let (u, v) = (branch[0], branch[1]);
    let mut lens = Vec::with_capacity(3);
    for &first in g.neighbors(u) {
        let (mut prev, mut cur, mut len) = (u, first, 1);
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).iter().copied().find(|&y| y != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        if cur != v {
            return None;
        }
        lens.push(len);
    }
    ThetaSpec::new(lens[0], lens[1], lens[2]).ok().map(|spec| (spec, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::is_mixed_generator;

    #[test]
    fn construction_counts() {
        let t = theta(ThetaSpec::new(2, 2, 2).unwrap()).unwrap();
        assert_eq!((t.graph.n(), t.graph.m()), (5, 6));
        let mut degrees: Vec<_> = (0..5).map(|x| t.graph.degree(x)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3]);

        let t = theta(ThetaSpec::new(2, 1, 2).unwrap()).unwrap();
        assert_eq!((t.graph.n(), t.graph.m()), (4, 5));
        assert!(t.graph.has_edge(0, 1));

        assert!(matches!(ThetaSpec::new(1, 1, 4), Err(FamilyError::InvalidSpec(_))));
        assert!(ThetaSpec::new(0, 2, 2).is_err());
    }

    #[test]
    fn balance() {
        assert!(ThetaSpec::new(3, 3, 4).unwrap().is_balanced());
        assert!(ThetaSpec::new(2, 2, 2).unwrap().is_balanced());
        assert!(!ThetaSpec::new(2, 2, 4).unwrap().is_balanced());
    }

    #[test]
    fn antipodes() {
        assert_eq!(antipodal_vertices(6, 0), vec![3]);
        assert_eq!(antipodal_vertices(5, 0), vec![2, 3]);
        assert_eq!(antipodal_vertices(3, 1), vec![0, 2]);
    }

    #[test]
    fn balanced_generators() {
        let t = theta(ThetaSpec::new(2, 2, 2).unwrap()).unwrap();
        // v = 1 has neighbours 3 (on P2) and 4 (on P3)
        assert_eq!(balanced_theta_generator(&t).unwrap(), vec![0, 1, 3, 4]);
        // neighbours on the two shorter paths of theta(2,3,3) do not resolve
        let t = theta(ThetaSpec::new(2, 3, 3).unwrap()).unwrap();
        let dt = DistanceTable::new(&t.graph).unwrap();
        assert!(!is_mixed_generator(&dt, &[0, 1, 2, 4]));
        for (a, b, c) in [(2, 2, 2), (3, 3, 3), (1, 2, 2), (2, 3, 3)] {
            let t = theta(ThetaSpec::new(a, b, c).unwrap()).unwrap();
            let set = balanced_theta_generator(&t).unwrap();
            assert_eq!(set.len(), 4);
            let dt = DistanceTable::new(&t.graph).unwrap();
            assert!(is_mixed_generator(&dt, &set), "{}", t.spec);
        }
        let t = theta(ThetaSpec::new(2, 2, 4).unwrap()).unwrap();
        assert!(matches!(balanced_theta_generator(&t), Err(FamilyError::NotBalanced(_))));
    }

    #[test]
    fn unbalanced_generators() {
        // theta(2,2,4): P3 = 0-4-5-6-1; antipode of u on the 6-cycle is 6
        let t = theta(ThetaSpec::new(2, 2, 4).unwrap()).unwrap();
        let dt = DistanceTable::new(&t.graph).unwrap();
        let set = unbalanced_theta_generator(&t).unwrap();
        assert!(set.contains(&6));
        assert_eq!(dt.vv(0, 6), 3);
        assert!(is_mixed_generator(&dt, &set));

        // odd cycle of length 5: two antipodes of u, the one nearer v is kept
        let t = theta(ThetaSpec::new(1, 2, 4).unwrap()).unwrap();
        let dt = DistanceTable::new(&t.graph).unwrap();
        let set = unbalanced_theta_generator(&t).unwrap();
        assert_eq!(set.len(), 3);
        assert!(is_mixed_generator(&dt, &set));

        let t = theta(ThetaSpec::new(3, 3, 3).unwrap()).unwrap();
        assert!(matches!(unbalanced_theta_generator(&t), Err(FamilyError::Balanced(_))));
    }

    #[test]
    fn recognition() {
        for spec in ThetaSpec::all_up_to(9) {
            let t = theta(spec).unwrap();
            let perm: Vec<usize> = (0..t.graph.n()).rev().collect();
            let (found, _, _) = recognize_theta(&t.graph.permuted(&perm)).unwrap();
            assert_eq!(found, spec);
        }
        // two triangles joined by a path also has two degree-3 vertices
        let dumbbell = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(recognize_theta(&dumbbell).is_none());
        assert!(recognize_theta(&crate::families::cycle(5).unwrap()).is_none());
    }
}
