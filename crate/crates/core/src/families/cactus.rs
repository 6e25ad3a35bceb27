//! Cactus graphs and biconnected-block analysis.

use super::FamilyError;
use crate::graph::Graph;

/// Something glued onto an existing vertex: a cycle through it or a pendant
/// path starting at it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attachment {
    pub anchor: usize,
    pub length: usize,
}

/// A tree skeleton with cycles and pendant paths glued on one vertex each.
///
/// Cycles are attached in order and may anchor on vertices created by earlier
/// cycles; pendant paths come last and may anchor anywhere.
#[derive(Debug, Clone)]
pub struct CactusSpec {
    pub skeleton: Graph,
    pub cycles: Vec<Attachment>,
    pub pendants: Vec<Attachment>,
}

/// A block of the biconnected decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    /// A block whose edge count equals its vertex count (and exceeds one) is a cycle.
    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

pub fn cactus(spec: &CactusSpec) -> Result<Graph, FamilyError> {
    let skeleton = &spec.skeleton;
    if !skeleton.is_connected() || skeleton.m() + 1 != skeleton.n() {
        return Err(FamilyError::InvalidSpec("cactus skeleton must be a tree".into()));
    }
    let mut n = skeleton.n();
    let mut pairs: Vec<(usize, usize)> = skeleton.edges().to_vec();
    for att in &spec.cycles {
        if att.anchor >= n || att.length < 3 {
            return Err(FamilyError::InvalidSpec(format!("bad cycle attachment {att:?}")));
        }
        let mut prev = att.anchor;
        for _ in 1..att.length {
            pairs.push((prev, n));
            prev = n;
            n += 1;
        }
        pairs.push((prev, att.anchor));
    }
    for att in &spec.pendants {
        if att.anchor >= n || att.length == 0 {
            return Err(FamilyError::InvalidSpec(format!("bad pendant attachment {att:?}")));
        }
        let mut prev = att.anchor;
        for _ in 0..att.length {
            pairs.push((prev, n));
            prev = n;
            n += 1;
        }
    }
    let g = Graph::connected_from_edges(n, &pairs)?;
    if !is_cactus(&g) {
        return Err(FamilyError::NotEdgeDisjoint);
    }
    Ok(g)
}

/// Biconnected blocks, each with its edge set.
pub fn blocks(g: &Graph) -> Vec<Block> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Block>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, x: usize, parent: usize) {
            self.time += 1;
            self.disc[x] = self.time;
            self.low[x] = self.time;
            for &y in self.g.neighbors(x) {
                if self.disc[y] == 0 {
                    self.stack.push((x, y));
                    self.visit(y, x);
                    self.low[x] = self.low[x].min(self.low[y]);
                    if self.low[y] >= self.disc[x] {
                        let mut edges = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            edges.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (x, y) {
                                break;
                            }
                        }
                        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        edges.sort_unstable();
                        self.out.push(Block { vertices, edges });
                    }
                } else if y != parent && self.disc[y] < self.disc[x] {
                    self.stack.push((x, y));
                    self.low[x] = self.low[x].min(self.disc[y]);
                }
            }
        }
    }
    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, usize::MAX);
        }
    }
    dfs.out
}

/// Connected, and every block is a bridge or a cycle.
pub fn is_cactus(g: &Graph) -> bool {
    g.is_connected() && blocks(g).iter().all(|b| b.edges.len() == 1 || b.is_cycle())
}

/// Vertex sets of the cycles of a cactus.
pub fn cactus_cycles(g: &Graph) -> Vec<Vec<usize>> {
    blocks(g)
        .into_iter()
        .filter(Block::is_cycle)
        .map(|b| b.vertices)
        .collect()
}

/// Every cycle contains exactly one vertex of degree at least three.
/// Vacuously true for trees.
pub fn every_cycle_has_one_branch_vertex(g: &Graph) -> bool {
    cactus_cycles(g)
        .iter()
        .all(|c| c.iter().filter(|&&x| g.degree(x) >= 3).count() == 1)
}
