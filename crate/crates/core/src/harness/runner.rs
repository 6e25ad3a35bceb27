//! Parallel evaluation of a graph stream with in-order emission.

use std::collections::{BTreeMap, HashMap};
use std::thread;

use crossbeam::channel;

use super::report::{Status, VerificationReport};
use crate::graph::Graph;
use crate::io::IoError;
use crate::metric::SearchOptions;

/// One item of an input population.
pub struct Job {
    pub id: String,
    pub graph: Result<Graph, IoError>,
}

/// Aggregated counts of a verification run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub by_status: HashMap<Status, usize>,
    pub parse_errors: Vec<(String, IoError)>,
    pub findings: Vec<VerificationReport>,
    /// Equality cases by family.
    pub equality_qualifying_cactus: usize,
    pub equality_balanced_theta: usize,
}

impl Summary {
    pub fn count(&self, status: Status) -> usize {
        self.by_status.get(&status).copied().unwrap_or(0)
    }

    fn record(&mut self, report: &VerificationReport) {
        self.total += 1;
        *self.by_status.entry(report.status).or_default() += 1;
        if let Some(class) = report.classification.filter(|c| c.is_equality) {
            self.equality_qualifying_cactus += usize::from(class.is_qualifying_cactus);
            self.equality_balanced_theta += usize::from(class.is_balanced_theta);
        }
        if report.is_finding() {
            self.findings.push(report.clone());
        }
    }

    /// Any bound violation or equality case outside the known families.
    pub fn has_findings(&self) -> bool {
        !self.findings.is_empty()
    }
}

/// Evaluates every job on `workers` threads and hands reports to `emit` in
/// input order. Parse failures are collected in the summary and skipped.
pub fn run<I, F, E>(jobs: I, workers: usize, options: SearchOptions, mut emit: F) -> Result<Summary, E>
where
    I: IntoIterator<Item = Job>,
    I::IntoIter: Send,
    F: FnMut(&VerificationReport) -> Result<(), E>,
{
    let workers = workers.max(1);
    let (job_tx, job_rx) = channel::bounded::<(usize, String, Graph)>(workers * 4);
    let (out_tx, out_rx) = channel::unbounded::<(usize, VerificationReport)>();
    let mut summary = Summary::default();
    let mut parse_errors = Vec::new();

    thread::scope(|scope| {
        let jobs = jobs.into_iter();
        let producer = scope.spawn(move || {
            let mut errors = Vec::new();
            let mut seq = 0;
            for job in jobs {
                match job.graph {
                    Ok(g) => {
                        if job_tx.send((seq, job.id, g)).is_err() {
                            break;
                        }
                        seq += 1;
                    }
                    Err(e) => errors.push((job.id, e)),
                }
            }
            errors
        });
        for _ in 0..workers {
            let rx = job_rx.clone();
            let tx = out_tx.clone();
            scope.spawn(move || {
                for (seq, id, g) in rx {
                    if tx.send((seq, VerificationReport::evaluate(id, &g, options))).is_err() {
                        break;
                    }
                }
            });
        }
        drop(job_rx);
        drop(out_tx);

        // reports arrive out of order; release them by sequence number
        let mut pending = BTreeMap::new();
        let mut next = 0;
        let mut result = Ok(());
        for (seq, report) in out_rx {
            pending.insert(seq, report);
            while let Some(report) = pending.remove(&next) {
                summary.record(&report);
                if result.is_ok() {
                    result = emit(&report);
                }
                next += 1;
            }
        }
        parse_errors = producer.join().expect("producer thread panicked");
        result
    })?;
    summary.parse_errors = parse_errors;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::enumerate_connected;

    fn population() -> Vec<Job> {
        let mut jobs: Vec<Job> = (2..=5)
            .flat_map(|n| enumerate_connected(n).unwrap().enumerate().map(move |(i, g)| (n, i, g)))
            .map(|(n, i, g)| Job {
                id: format!("n{n}-{i:03}"),
                graph: Ok(g),
            })
            .collect();
        jobs.insert(
            3,
            Job {
                id: "bad".into(),
                graph: Err(IoError::TruncatedBits),
            },
        );
        jobs
    }

    #[test]
    fn order_and_worker_independence() {
        let collect = |workers| {
            let mut rows = Vec::new();
            let summary = run(population(), workers, SearchOptions::pruned(), |r| {
                rows.push((r.id.clone(), r.mdim, r.status, r.witness.clone()));
                Ok::<_, ()>(())
            })
            .unwrap();
            (rows, summary.total, summary.parse_errors.len())
        };
        let single = collect(1);
        let many = collect(4);
        assert_eq!(single, many);
        assert_eq!(single.2, 1);
        assert_eq!(single.1, 1 + 2 + 6 + 21);
        let ids: Vec<_> = single.0.iter().map(|r| r.0.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn empty_population() {
        let summary = run(Vec::new(), 3, SearchOptions::pruned(), |_| Ok::<_, ()>(())).unwrap();
        assert_eq!(summary.total, 0);
        assert!(!summary.has_findings());
    }
}
