//! Exact minimum generator search.
//!
//! Subsets are tried by increasing cardinality and, within a cardinality, in
//! lexicographic order, so the first hit is the lexicographically smallest
//! minimum generator. A depth-first walk over the subset tree keeps the
//! partition of elements induced by the chosen prefix and refines it one
//! vertex at a time.

use serde::Serialize;
use thiserror::Error;

use super::resolve::{Signature, Variant};
use crate::distance::DistanceTable;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices, got {0}")]
    TooSmall(usize),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
}

impl From<GraphError> for SearchError {
    fn from(_: GraphError) -> Self {
        SearchError::Disconnected
    }
}

/// Switches for the individual pruning rules, plus a node budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Restrict to subsets containing every leaf (mixed variant only).
    pub leaf_forcing: bool,
    /// Keep one candidate per class of identical signatures.
    pub signature_dedup: bool,
    /// Give up after this many search nodes.
    pub max_nodes: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            leaf_forcing: false,
            signature_dedup: true,
            max_nodes: None,
        }
    }
}

impl SearchOptions {
    /// Plain subset enumeration with no pruning at all.
    pub fn exhaustive() -> Self {
        SearchOptions {
            leaf_forcing: false,
            signature_dedup: false,
            max_nodes: None,
        }
    }

    /// Every pruning rule enabled.
    pub fn pruned() -> Self {
        SearchOptions {
            leaf_forcing: true,
            signature_dedup: true,
            max_nodes: None,
        }
    }

    pub fn with_max_nodes(mut self, budget: Option<u64>) -> Self {
        self.max_nodes = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorWitness {
    pub dimension: usize,
    pub witness: Vec<usize>,
    pub variant: Variant,
    pub nodes_explored: u64,
}

pub fn mixed_metric_dimension(g: &Graph, options: SearchOptions) -> Result<GeneratorWitness, SearchError> {
    metric_dimension(g, Variant::Mixed, options)
}

pub fn vertex_metric_dimension(g: &Graph, options: SearchOptions) -> Result<GeneratorWitness, SearchError> {
    metric_dimension(g, Variant::VertexOnly, options)
}

pub fn edge_metric_dimension(g: &Graph, options: SearchOptions) -> Result<GeneratorWitness, SearchError> {
    metric_dimension(g, Variant::EdgeOnly, options)
}

pub fn metric_dimension(g: &Graph, variant: Variant, options: SearchOptions) -> Result<GeneratorWitness, SearchError> {
    if g.n() < 2 {
        return Err(SearchError::TooSmall(g.n()));
    }
    let dt = DistanceTable::new(g)?;
    let forced: Vec<bool> = if options.leaf_forcing && variant == Variant::Mixed {
        (0..g.n()).map(|v| g.degree(v) == 1).collect()
    } else {
        vec![false; g.n()]
    };
    search(&dt, variant, &forced, options)
}

/// Runs the search on a prebuilt table. `forced[v]` marks vertices that every
/// generator is known to contain; it must have one flag per vertex.
pub fn search(
    dt: &DistanceTable,
    variant: Variant,
    forced: &[bool],
    options: SearchOptions,
) -> Result<GeneratorWitness, SearchError> {
    let n = dt.n();
    assert_eq!(forced.len(), n, "one forced flag per vertex");
    let mut candidates: Vec<usize> = Vec::with_capacity(n);
    for (v, &is_forced) in forced.iter().enumerate().take(n) {
        let duplicate = options.signature_dedup
            && candidates
                .iter()
                .any(|&c| Signature::of(dt, c, variant) == Signature::of(dt, v, variant));
        if !duplicate || is_forced {
            candidates.push(v);
        }
    }
    let forced_flags: Vec<bool> = candidates.iter().map(|&v| forced[v]).collect();
    let forced_total = forced_flags.iter().filter(|&&f| f).count();

    let mut state = SearchState::new(dt, variant, candidates, forced_flags, options.max_nodes);
    for k in forced_total.max(1)..=state.candidates.len() {
        if state.descend(0, 0, k)? {
            let witness: Vec<usize> = state.chosen.clone();
            return Ok(GeneratorWitness {
                dimension: k,
                witness,
                variant,
                nodes_explored: state.nodes,
            });
        }
    }
    // the full vertex set always resolves a connected graph on >= 2 vertices
    unreachable!("no generator among all candidates")
}

struct SearchState<'a> {
    dt: &'a DistanceTable,
    columns: Vec<usize>,
    candidates: Vec<usize>,
    forced: Vec<bool>,
    /// forced_suffix[i] = forced candidates at positions >= i
    forced_suffix: Vec<usize>,
    /// labels[d] = class label of each column after choosing d vertices
    labels: Vec<Vec<u32>>,
    class_counts: Vec<usize>,
    stamp: Vec<u32>,
    slot: Vec<u32>,
    generation: u32,
    stride: usize,
    chosen: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
}

impl<'a> SearchState<'a> {
    fn new(
        dt: &'a DistanceTable,
        variant: Variant,
        candidates: Vec<usize>,
        forced: Vec<bool>,
        max_nodes: Option<u64>,
    ) -> Self {
        let columns: Vec<usize> = variant.columns(dt.n(), dt.m()).collect();
        let width = columns.len();
        let stride = dt.diameter() as usize + 1;
        let mut forced_suffix = vec![0; candidates.len() + 1];
        for i in (0..candidates.len()).rev() {
            forced_suffix[i] = forced_suffix[i + 1] + usize::from(forced[i]);
        }
        SearchState {
            dt,
            columns,
            forced_suffix,
            labels: vec![vec![0; width]],
            class_counts: vec![usize::from(width > 0)],
            stamp: vec![0; width.max(1) * stride],
            slot: vec![0; width.max(1) * stride],
            generation: 0,
            stride,
            candidates,
            forced,
            chosen: Vec::new(),
            nodes: 0,
            max_nodes,
        }
    }

    /// Refines the partition at `depth` by the distances from `s`.
    fn refine(&mut self, depth: usize, s: usize) {
        if self.labels.len() <= depth + 1 {
            self.labels.push(vec![0; self.columns.len()]);
            self.class_counts.push(0);
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        let row = self.dt.row(s);
        let (before, after) = self.labels.split_at_mut(depth + 1);
        let parent = &before[depth];
        let child = &mut after[0];
        let mut classes = 0u32;
        for (i, &c) in self.columns.iter().enumerate() {
            let key = parent[i] as usize * self.stride + row[c] as usize;
            if self.stamp[key] != self.generation {
                self.stamp[key] = self.generation;
                self.slot[key] = classes;
                classes += 1;
            }
            child[i] = self.slot[key];
        }
        self.class_counts[depth + 1] = classes as usize;
    }

    fn descend(&mut self, start: usize, depth: usize, k: usize) -> Result<bool, SearchError> {
        if depth == k {
            return Ok(self.class_counts[depth] == self.columns.len());
        }
        let remaining = k - depth;
        let total = self.candidates.len();
        for i in start..total {
            if total - i < remaining || self.forced_suffix[i] > remaining {
                break;
            }
            self.nodes += 1;
            if let Some(budget) = self.max_nodes {
                if self.nodes > budget {
                    return Err(SearchError::BudgetExceeded(budget));
                }
            }
            let v = self.candidates[i];
            self.refine(depth, v);
            self.chosen.push(v);
            if self.descend(i + 1, depth + 1, k)? {
                return Ok(true);
            }
            self.chosen.pop();
            if self.forced[i] {
                // a forced candidate may not be skipped
                break;
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinations::Combinations;
    use crate::families::{complete, cycle, path, star};
    use crate::metric::resolve::is_generator;

    /// Smallest generator size and lexicographically first witness, by trying
    /// every subset with the pairwise definition.
    fn brute_force(g: &Graph, variant: Variant) -> (usize, Vec<usize>) {
        let dt = DistanceTable::new(g).unwrap();
        for k in 1..=g.n() {
            if let Some(set) = Combinations::new(g.n(), k).find(|set| is_generator(&dt, set, variant)) {
                return (k, set);
            }
        }
        unreachable!()
    }

    #[test]
    fn paths_and_cycles() {
        let p5 = path(5).unwrap();
        assert_eq!(
            mixed_metric_dimension(&p5, SearchOptions::default()).unwrap().dimension,
            2
        );
        assert_eq!(
            vertex_metric_dimension(&p5, SearchOptions::default())
                .unwrap()
                .dimension,
            1
        );
        for n in 3..=12 {
            let g = cycle(n).unwrap();
            assert_eq!(
                mixed_metric_dimension(&g, SearchOptions::pruned()).unwrap().dimension,
                3,
                "C_{n}"
            );
        }
    }

    #[test]
    fn brute_force_fixtures() {
        // values produced by the brute_force oracle above
        let k4 = complete(4).unwrap();
        assert_eq!(brute_force(&k4, Variant::Mixed), (4, vec![0, 1, 2, 3]));
        assert_eq!(brute_force(&k4, Variant::EdgeOnly), (3, vec![0, 1, 2]));
        assert_eq!(brute_force(&cycle(4).unwrap(), Variant::VertexOnly), (2, vec![0, 1]));

        assert_eq!(
            mixed_metric_dimension(&k4, SearchOptions::default()).unwrap().witness,
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            edge_metric_dimension(&k4, SearchOptions::default()).unwrap().dimension,
            3
        );
        assert_eq!(
            vertex_metric_dimension(&cycle(4).unwrap(), SearchOptions::default())
                .unwrap()
                .dimension,
            2
        );
    }

    #[test]
    fn single_edge_needs_both_ends() {
        let k2 = path(2).unwrap();
        let w = mixed_metric_dimension(&k2, SearchOptions::pruned()).unwrap();
        assert_eq!((w.dimension, w.witness), (2, vec![0, 1]));
    }

    #[test]
    fn all_option_combinations_agree_with_brute_force() {
        let graphs = [
            star(4).unwrap(),
            path(6).unwrap(),
            cycle(6).unwrap(),
            complete(4).unwrap(),
        ];
        for g in &graphs {
            for variant in [Variant::Mixed, Variant::VertexOnly, Variant::EdgeOnly] {
                let expected = brute_force(g, variant);
                for leaf_forcing in [false, true] {
                    for signature_dedup in [false, true] {
                        let opts = SearchOptions {
                            leaf_forcing,
                            signature_dedup,
                            max_nodes: None,
                        };
                        let w = metric_dimension(g, variant, opts).unwrap();
                        assert_eq!((w.dimension, w.witness), expected, "{g:?} {variant:?} {opts:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn budget_and_errors() {
        let g = complete(5).unwrap();
        let err = mixed_metric_dimension(&g, SearchOptions::exhaustive().with_max_nodes(Some(3)));
        assert_eq!(err, Err(SearchError::BudgetExceeded(3)));
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            mixed_metric_dimension(&disconnected, SearchOptions::default()),
            Err(SearchError::Disconnected)
        );
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(
            mixed_metric_dimension(&k1, SearchOptions::default()),
            Err(SearchError::TooSmall(1))
        );
    }
}
