//! Reproduction suites for the known exact results, each a finite check over
//! an explicit population.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::report::is_cycle;
use crate::combinations::Combinations;
use crate::distance::DistanceTable;
use crate::families::{
    balanced_theta_generator, cactus, cycle, every_cycle_has_one_branch_vertex, labeled_trees, path, theta,
    unbalanced_theta_generator, Attachment, CactusSpec, ThetaSpec,
};
use crate::graph::{Graph, MixedElement};
use crate::invariants::{cyclomatic_number, leaf_count, vertex_connectivity};
use crate::io::enumerate_connected;
use crate::metric::{
    distinguishes, enclosed, half_enclosed, is_generator, is_mixed_generator, mixed_metric_dimension, SearchOptions,
    Variant,
};

/// Result of one suite: how many instances were checked and what failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<12} checked={} failures={}",
            self.name,
            self.checked,
            self.failures.len()
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, " first: {first}")?;
        }
        Ok(())
    }
}

fn mdim(g: &Graph, options: SearchOptions) -> Option<usize> {
    mixed_metric_dimension(g, options).ok().map(|w| w.dimension)
}

/// `mdim(T) = L1(T)` for every labeled tree with `2 <= n <= max_n`.
pub fn tree_suite(max_n: usize, options: SearchOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("trees");
    for n in 2..=max_n {
        for t in labeled_trees(n) {
            let got = mdim(&t, options);
            out.check(got == Some(leaf_count(&t)), || {
                format!("{t:?}: mdim {got:?} != L1 {}", leaf_count(&t))
            });
        }
    }
    out
}

/// Every cycle in the range has mixed dimension three.
pub fn cycle_suite(lengths: std::ops::RangeInclusive<usize>, options: SearchOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("cycles");
    for n in lengths {
        let got = mdim(&cycle(n).expect("n >= 3"), options);
        out.check(got == Some(3), || format!("C_{n}: mdim {got:?}"));
    }
    out
}

/// Cacti from a path skeleton on 1..=3 vertices, up to two cycles of length
/// 3..=5 and up to two pendant paths of length 1..=2, with at most `max_n`
/// vertices. Pure cycles are left out.
pub fn cactus_population(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for skeleton_n in 1..=3 {
        let skeleton = path(skeleton_n).expect("nonempty");
        // cycle lists with anchors in non-decreasing order, and the vertex count
        let mut cycle_sets: Vec<(Vec<Attachment>, usize)> = vec![(Vec::new(), skeleton_n)];
        let mut frontier = cycle_sets.clone();
        for _ in 0..2 {
            let mut grown = Vec::new();
            for (cycles, n) in &frontier {
                let min_anchor = cycles.last().map_or(0, |a| a.anchor);
                for anchor in min_anchor..*n {
                    for length in 3..=5 {
                        if n + length - 1 <= max_n {
                            let mut c = cycles.clone();
                            c.push(Attachment { anchor, length });
                            grown.push((c, n + length - 1));
                        }
                    }
                }
            }
            cycle_sets.extend(grown.iter().cloned());
            frontier = grown;
        }
        for (cycles, n) in &cycle_sets {
            let singles: Vec<Attachment> = (0..*n)
                .flat_map(|anchor| (1..=2).map(move |length| Attachment { anchor, length }))
                .collect();
            let mut pendant_sets: Vec<Vec<Attachment>> = vec![Vec::new()];
            for (i, &first) in singles.iter().enumerate() {
                pendant_sets.push(vec![first]);
                pendant_sets.extend(singles[i..].iter().map(|&second| vec![first, second]));
            }
            for pendants in pendant_sets {
                let total = n + pendants.iter().map(|p| p.length).sum::<usize>();
                if total > max_n || total < 2 {
                    continue;
                }
                let spec = CactusSpec {
                    skeleton: skeleton.clone(),
                    cycles: cycles.clone(),
                    pendants,
                };
                let g = cactus(&spec).expect("population specs are valid");
                if !is_cycle(&g) {
                    let id = format!(
                        "cactus(s={skeleton_n},cycles={:?},pendants={:?})",
                        spec.cycles, spec.pendants
                    );
                    out.push((id, g));
                }
            }
        }
    }
    out
}

/// For cacti other than cycles: `mdim <= L1 + 2c`, with equality exactly when
/// every cycle has one vertex of degree at least three.
pub fn cactus_suite(max_n: usize, options: SearchOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("cactus");
    for (id, g) in cactus_population(max_n) {
        let bound = leaf_count(&g) + 2 * cyclomatic_number(&g);
        let got = mdim(&g, options);
        let attained = every_cycle_has_one_branch_vertex(&g);
        let ok = got.is_some_and(|d| d <= bound && (d == bound) == attained);
        out.check(ok, || {
            format!("{id}: mdim {got:?}, bound {bound}, one branch vertex per cycle {attained}")
        });
    }
    out
}

/// `mdim < 2c` on every 3-connected graph from the enumerator, `n <= max_n`.
pub fn three_connected_suite(max_n: usize, options: SearchOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("3-connected");
    for n in 4..=max_n {
        for g in enumerate_connected(n).expect("n within enumerator range") {
            if vertex_connectivity(&g) >= 3 {
                let c = cyclomatic_number(&g);
                let got = mdim(&g, options);
                out.check(got.is_some_and(|d| d < 2 * c), || {
                    format!("{g:?}: mdim {got:?}, 2c = {}", 2 * c)
                });
            }
        }
    }
    out
}

/// Balanced thetas on at most `max_n` vertices: no triple with one internal
/// vertex from each path is a mixed generator.
pub fn internal_triple_suite(max_n: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("triples");
    for spec in ThetaSpec::all_up_to(max_n + 1)
        .into_iter()
        .filter(ThetaSpec::is_balanced)
    {
        let t = theta(spec).expect("valid spec");
        let dt = DistanceTable::new(&t.graph).expect("connected");
        for &x in t.internal(0) {
            for &y in t.internal(1) {
                for &z in t.internal(2) {
                    let set = [x, y, z];
                    out.check(!is_mixed_generator(&dt, &set), || format!("{spec}: {set:?} resolves"));
                }
            }
        }
    }
    out
}

/// One row of the theta table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaRow {
    pub spec: ThetaSpec,
    pub n: usize,
    pub balanced: bool,
    pub mdim: usize,
    /// The constructed 4-set (balanced) or 3-set (unbalanced) resolves.
    pub generator_ok: bool,
    /// Unbalanced only: no 2-subset resolves.
    pub no_pair_resolves: Option<bool>,
    pub verdict_ok: bool,
}

pub fn theta_row(spec: ThetaSpec, options: SearchOptions) -> ThetaRow {
    let t = theta(spec).expect("valid spec");
    let dt = DistanceTable::new(&t.graph).expect("connected");
    let balanced = spec.is_balanced();
    let dimension = mdim(&t.graph, options).expect("theta graphs are connected");
    let constructed = if balanced {
        balanced_theta_generator(&t)
    } else {
        unbalanced_theta_generator(&t)
    };
    let generator_ok =
        constructed.is_ok_and(|s| s.len() == if balanced { 4 } else { 3 } && is_mixed_generator(&dt, &s));
    let no_pair_resolves =
        (!balanced).then(|| Combinations::new(t.graph.n(), 2).all(|pair| !is_generator(&dt, &pair, Variant::Mixed)));
    let expected = if balanced { 4 } else { 3 };
    ThetaRow {
        spec,
        n: t.graph.n(),
        balanced,
        mdim: dimension,
        generator_ok,
        no_pair_resolves,
        verdict_ok: dimension == expected && generator_ok && no_pair_resolves != Some(false),
    }
}

/// Rows for every valid spec with `a + b + c <= max_total`.
pub fn theta_scan(max_total: usize, options: SearchOptions) -> Vec<ThetaRow> {
    ThetaSpec::all_up_to(max_total)
        .into_iter()
        .map(|s| theta_row(s, options))
        .collect()
}

pub fn theta_suite(max_total: usize, options: SearchOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("theta");
    for row in theta_scan(max_total, options) {
        out.check(row.verdict_ok, || format!("{row:?}"));
    }
    out
}

/// Random connected graph on `n` vertices: a random spanning tree plus
/// independent extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra_edge_p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    for a in 0..n {
        for b in a + 1..n {
            let tree_edge = pairs.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (a, b));
            if !tree_edge && rng.gen_bool(extra_edge_p) {
                pairs.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &pairs).expect("simple by construction")
}

/// Counts for the enclosure implications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnclosureStats {
    pub samples: usize,
    pub enclosed: usize,
    pub half_enclosed: usize,
}

/// Samples (graph, set, pair) triples and checks that enclosed pairs are
/// distinguished, and half-enclosed pairs too unless they are an incident
/// vertex-edge pair.
pub fn enclosure_suite(samples: usize, seed: u64) -> (SuiteOutcome, EnclosureStats) {
    let mut out = SuiteOutcome::new("enclosure");
    let mut stats = EnclosureStats::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while stats.samples < samples {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.0..0.5);
        let g = random_connected(&mut rng, n, p);
        let dt = DistanceTable::new(&g).expect("connected");
        let elems: Vec<MixedElement> = g.elements().collect();
        for _ in 0..20 {
            let k = rng.gen_range(1..=n.min(4));
            let set: Vec<usize> = rand::seq::index::sample(&mut rng, n, k).into_vec();
            let pair: Vec<&MixedElement> = elems.choose_multiple(&mut rng, 2).collect();
            let (x, y) = (*pair[0], *pair[1]);
            let resolved = set.iter().any(|&s| distinguishes(&dt, s, x, y));
            stats.samples += 1;
            if enclosed(&dt, &set, x, y) {
                stats.enclosed += 1;
                out.check(resolved, || {
                    format!("{g:?} S={set:?} {x:?},{y:?} enclosed but unresolved")
                });
            }
            if half_enclosed(&dt, &set, x, y) {
                stats.half_enclosed += 1;
                out.check(resolved || x.incident(y, &g), || {
                    format!("{g:?} S={set:?} {x:?},{y:?} half-enclosed but unresolved")
                });
            }
        }
    }
    (out, stats)
}

/// Pruned search equals plain enumeration, and every minimum generator
/// contains every leaf, on all connected graphs with `2 <= n <= max_n`.
pub fn pruning_suite(max_n: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("pruning");
    for n in 2..=max_n {
        for g in enumerate_connected(n).expect("n within enumerator range") {
            let plain = mixed_metric_dimension(&g, SearchOptions::exhaustive()).expect("connected");
            let pruned = mixed_metric_dimension(&g, SearchOptions::pruned()).expect("connected");
            out.check(
                plain.dimension == pruned.dimension && plain.witness == pruned.witness,
                || format!("{g:?}: plain {:?} vs pruned {:?}", plain.witness, pruned.witness),
            );
            let dt = DistanceTable::new(&g).expect("connected");
            let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
            for set in Combinations::new(n, plain.dimension) {
                if is_mixed_generator(&dt, &set) {
                    out.check(leaves.iter().all(|l| set.contains(l)), || {
                        format!("{g:?}: minimum generator {set:?} misses a leaf of {leaves:?}")
                    });
                }
            }
        }
    }
    out
}

/// Settings for [`check_theorems`].
#[derive(Debug, Clone, Copy)]
pub struct TheoremConfig {
    pub tree_max_n: usize,
    pub cycle_max_n: usize,
    pub cactus_max_n: usize,
    pub three_connected_max_n: usize,
    pub triple_max_n: usize,
    pub theta_max_total: usize,
    pub enclosure_samples: usize,
    pub pruning_max_n: usize,
    pub seed: u64,
    pub options: SearchOptions,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        TheoremConfig {
            tree_max_n: 7,
            cycle_max_n: 12,
            cactus_max_n: 12,
            three_connected_max_n: 7,
            triple_max_n: 13,
            theta_max_total: 15,
            enclosure_samples: 10_000,
            pruning_max_n: 6,
            seed: 0x5eed,
            options: SearchOptions::pruned(),
        }
    }
}

/// Runs every suite in turn.
pub fn check_theorems(config: &TheoremConfig) -> Vec<SuiteOutcome> {
    vec![
        tree_suite(config.tree_max_n, config.options),
        cycle_suite(3..=config.cycle_max_n, config.options),
        cactus_suite(config.cactus_max_n, config.options),
        three_connected_suite(config.three_connected_max_n, config.options),
        internal_triple_suite(config.triple_max_n),
        theta_suite(config.theta_max_total, config.options),
        enclosure_suite(config.enclosure_samples, config.seed).0,
        pruning_suite(config.pruning_max_n),
    ]
}
