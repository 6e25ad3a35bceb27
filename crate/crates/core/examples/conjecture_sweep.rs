// Every connected graph on up to six vertices against `mdim <= L1 + 2c`,
// with equality cases classified by family.

use std::error::Error;

use mixdim::harness::{run, Job, Status};
use mixdim::io::enumerate_connected;
use mixdim::metric::SearchOptions;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut jobs = Vec::new();
    for n in 2..=6 {
        for (i, g) in enumerate_connected(n)?.enumerate() {
            jobs.push(Job {
                id: format!("n{n}-{i:03}"),
                graph: Ok(g),
            });
        }
    }
    let summary = run(jobs, 4, SearchOptions::pruned(), |r| {
        if r.status == Status::Equality {
            println!("{:<8} n={} L1={} c={} mdim={:?}", r.id, r.n, r.l1, r.c, r.mdim);
        }
        Ok::<_, Box<dyn Error>>(())
    })?;
    for status in Status::ALL {
        println!("{:<20}{}", status.label(), summary.count(status));
    }
    println!(
        "equality: {} cacti, {} balanced thetas; findings: {}",
        summary.equality_qualifying_cactus,
        summary.equality_balanced_theta,
        summary.findings.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
