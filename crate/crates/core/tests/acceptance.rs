//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every comparison is exact: dimensions
//! are integers and the tolerance is zero.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mixdim::combinations::Combinations;
use mixdim::families::{
    balanced_theta_generator, cycle, every_cycle_has_one_branch_vertex, labeled_trees, theta,
    unbalanced_theta_generator, ThetaSpec,
};
use mixdim::harness::{cactus_population, random_connected, run, Job, Status};
use mixdim::invariants::{cyclomatic_number, leaf_count, vertex_connectivity};
use mixdim::io::{encode_graph6, encode_sparse6, enumerate_connected, parse_graph6, parse_sparse6};
use mixdim::metric::{
    distinguishes, enclosed, half_enclosed, is_mixed_generator, mixed_metric_dimension, SearchOptions,
};
use mixdim::{DistanceTable, Graph, MixedElement};

const THETA_MAX_TOTAL: usize = 15;
const TRIPLE_MAX_N: usize = 13;
const TREE_MAX_N: usize = 7;
const CYCLES: std::ops::RangeInclusive<usize> = 3..=12;
const CACTUS_MAX_N: usize = 12;
const SWEEP_MAX_N: usize = 7;
const THREE_CONNECTED_MAX_N: usize = 7;
const ENCLOSURE_SAMPLES: usize = 10_000;
const PRUNING_MAX_N: usize = 6;
const SEED: u64 = 0x5eed;
/// Connected graph counts for n = 1..=5, produced by the brute-force
/// isomorphism oracle in the enumerator's unit tests.
const ENUMERATOR_FIXTURES: [(usize, usize); 5] = [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)];

type Check = fn() -> Criterion;

struct Criterion {
    checked: usize,
    failures: Vec<String>,
    notes: String,
}

impl Criterion {
    fn new() -> Self {
        Criterion {
            checked: 0,
            failures: Vec::new(),
            notes: String::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

fn exact(g: &Graph) -> usize {
    mixed_metric_dimension(g, SearchOptions::exhaustive())
        .expect("connected input")
        .dimension
}

fn theta_dichotomy() -> Criterion {
    let mut c = Criterion::new();
    for spec in ThetaSpec::all_up_to(THETA_MAX_TOTAL) {
        let [a, _, cc] = spec.lengths();
        let want = if cc - a <= 1 { 4 } else { 3 };
        let got = exact(&theta(spec).unwrap().graph);
        c.check(got == want, || format!("{spec}: mdim {got}, expected {want}"));
    }
    c
}

fn constructive_generators() -> Criterion {
    let mut c = Criterion::new();
    for spec in ThetaSpec::all_up_to(THETA_MAX_TOTAL) {
        let t = theta(spec).unwrap();
        let dt = DistanceTable::new(&t.graph).unwrap();
        if spec.is_balanced() {
            let set = balanced_theta_generator(&t).unwrap();
            c.check(set.len() == 4 && is_mixed_generator(&dt, &set), || {
                format!("{spec}: {set:?}")
            });
        } else {
            let set = unbalanced_theta_generator(&t).unwrap();
            c.check(set.len() == 3 && is_mixed_generator(&dt, &set), || {
                format!("{spec}: {set:?}")
            });
            let resolving_pair = Combinations::new(t.graph.n(), 2).find(|p| is_mixed_generator(&dt, p));
            c.check(resolving_pair.is_none(), || {
                format!("{spec}: pair {resolving_pair:?} resolves")
            });
        }
    }
    c
}

fn internal_triples() -> Criterion {
    let mut c = Criterion::new();
    let specs = ThetaSpec::all_up_to(TRIPLE_MAX_N + 1);
    for spec in specs
        .into_iter()
        .filter(|s| s.is_balanced() && s.vertex_count() <= TRIPLE_MAX_N)
    {
        let t = theta(spec).unwrap();
        let dt = DistanceTable::new(&t.graph).unwrap();
        for &x in t.internal(0) {
            for &y in t.internal(1) {
                for &z in t.internal(2) {
                    c.check(!is_mixed_generator(&dt, &[x, y, z]), || {
                        format!("{spec}: [{x}, {y}, {z}] resolves")
                    });
                }
            }
        }
    }
    c
}

fn trees() -> Criterion {
    let mut c = Criterion::new();
    for n in 2..=TREE_MAX_N {
        for t in labeled_trees(n) {
            let (got, want) = (exact(&t), leaf_count(&t));
            c.check(got == want, || format!("{t:?}: mdim {got}, L1 {want}"));
        }
    }
    c
}

fn cycles() -> Criterion {
    let mut c = Criterion::new();
    for n in CYCLES {
        let got = exact(&cycle(n).unwrap());
        c.check(got == 3, || format!("C_{n}: mdim {got}"));
    }
    c
}

fn cactus_equality() -> Criterion {
    let mut c = Criterion::new();
    let mut equalities = 0;
    for (id, g) in cactus_population(CACTUS_MAX_N) {
        let bound = leaf_count(&g) + 2 * cyclomatic_number(&g);
        let got = exact(&g);
        let attained = every_cycle_has_one_branch_vertex(&g);
        equalities += usize::from(got == bound);
        c.check(got <= bound && (got == bound) == attained, || {
            format!("{id}: mdim {got}, bound {bound}, one branch vertex per cycle {attained}")
        });
    }
    c.notes = format!("equality cases={equalities}");
    c
}

fn conjecture_sweep() -> Criterion {
    let mut c = Criterion::new();
    let mut jobs = Vec::new();
    for n in 2..=SWEEP_MAX_N {
        for (i, g) in enumerate_connected(n).unwrap().enumerate() {
            jobs.push(Job {
                id: format!("n{n}-{i:04}"),
                graph: Ok(g),
            });
        }
    }
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let summary = run(jobs, workers, SearchOptions::exhaustive(), |r| {
        c.check(r.status != Status::Violation && r.status != Status::Timeout, || {
            format!(
                "{}: status {} mdim {:?} bound {}",
                r.id,
                r.status.label(),
                r.mdim,
                r.bound
            )
        });
        Ok::<_, ()>(())
    })
    .unwrap();
    for f in &summary.findings {
        c.failures
            .push(format!("finding {}: {:?} {:?}", f.id, f.status, f.classification));
    }
    c.notes = format!(
        "equality={} (cactus {}, balanced theta {}) cycles skipped={} findings={}",
        summary.count(Status::Equality),
        summary.equality_qualifying_cactus,
        summary.equality_balanced_theta,
        summary.count(Status::SkippedCycle),
        summary.findings.len()
    );
    c
}

fn three_connected() -> Criterion {
    let mut c = Criterion::new();
    for n in 4..=THREE_CONNECTED_MAX_N {
        for g in enumerate_connected(n).unwrap() {
            if vertex_connectivity(&g) >= 3 {
                let (got, twice_c) = (exact(&g), 2 * cyclomatic_number(&g));
                c.check(got < twice_c, || format!("{g:?}: mdim {got}, 2c {twice_c}"));
            }
        }
    }
    c
}

fn property_suites() -> Criterion {
    let mut c = Criterion::new();

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut samples, mut n_enclosed, mut n_half) = (0, 0, 0);
    while samples < ENCLOSURE_SAMPLES {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.0..0.5);
        let g = random_connected(&mut rng, n, p);
        let dt = DistanceTable::new(&g).unwrap();
        let elems: Vec<MixedElement> = g.elements().collect();
        let k = rng.gen_range(1..=n.min(4));
        let set = rand::seq::index::sample(&mut rng, n, k).into_vec();
        let pair: Vec<MixedElement> = elems.choose_multiple(&mut rng, 2).copied().collect();
        let (x, y) = (pair[0], pair[1]);
        let resolved = set.iter().any(|&s| distinguishes(&dt, s, x, y));
        samples += 1;
        if enclosed(&dt, &set, x, y) {
            n_enclosed += 1;
            c.check(resolved, || {
                format!("{g:?} S={set:?} {x:?} {y:?}: enclosed, not distinguished")
            });
        }
        if half_enclosed(&dt, &set, x, y) {
            n_half += 1;
            c.check(resolved || x.incident(y, &g), || {
                format!("{g:?} S={set:?} {x:?} {y:?}: half-enclosed, not distinguished")
            });
        }
    }

    let mut population = 0;
    for n in 2..=PRUNING_MAX_N {
        for g in enumerate_connected(n).unwrap() {
            population += 1;
            let plain = mixed_metric_dimension(&g, SearchOptions::exhaustive()).unwrap();
            let pruned = mixed_metric_dimension(&g, SearchOptions::pruned()).unwrap();
            c.check(
                plain.dimension == pruned.dimension && plain.witness == pruned.witness,
                || format!("{g:?}: unpruned {:?}, pruned {:?}", plain.witness, pruned.witness),
            );
            let g6 = parse_graph6(encode_graph6(&g).as_bytes()).unwrap();
            let s6 = parse_sparse6(encode_sparse6(&g).as_bytes()).unwrap();
            c.check(g6.edges() == g.edges() && g6.n() == g.n(), || {
                format!("{g:?}: graph6 round trip")
            });
            c.check(s6.edges() == g.edges() && s6.n() == g.n(), || {
                format!("{g:?}: sparse6 round trip")
            });
        }
    }

    for (n, want) in ENUMERATOR_FIXTURES {
        let got = enumerate_connected(n).unwrap().count();
        c.check(got == want, || format!("n={n}: {got} graphs, expected {want}"));
    }
    c.notes = format!(
        "samples={samples} enclosed={n_enclosed} half-enclosed={n_half} population n<={PRUNING_MAX_N}: {population}"
    );
    c
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("1 theta dichotomy, a+b+c <= 15", theta_dichotomy),
        ("2 constructive generators", constructive_generators),
        ("3 internal triples, balanced n <= 13", internal_triples),
        ("4 trees, n <= 7", trees),
        ("5 cycles, n = 3..12", cycles),
        ("6 cactus equality, n <= 12", cactus_equality),
        ("7 bound sweep, connected n <= 7", conjecture_sweep),
        ("8 3-connected mdim < 2c, n <= 7", three_connected),
        ("9 enclosure, pruning, round trip, counts", property_suites),
    ];
    let mut all_passed = true;
    for (name, criterion) in criteria {
        let started = Instant::now();
        let c = criterion();
        let verdict = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        all_passed &= c.failures.is_empty();
        println!(
            "criterion {name:<42} {verdict} checked={} failures={} {:.2}s {}",
            c.checked,
            c.failures.len(),
            started.elapsed().as_secs_f64(),
            c.notes
        );
        for f in c.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
