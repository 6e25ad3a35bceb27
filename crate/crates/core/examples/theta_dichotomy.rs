// Balanced theta graphs need four landmarks, unbalanced ones three.

use std::error::Error;

use mixdim::families::{theta, ThetaSpec};
use mixdim::metric::{mixed_metric_dimension, SearchOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for spec in ThetaSpec::all_up_to(10) {
        let t = theta(spec)?;
        let w = mixed_metric_dimension(&t.graph, SearchOptions::pruned())?;
        let expected = if spec.is_balanced() { 4 } else { 3 };
        println!(
            "{spec:<14} n={:<2} balanced={:<5} mdim={}",
            spec.vertex_count(),
            spec.is_balanced(),
            w.dimension
        );
        if w.dimension != expected {
            return Err(format!("{spec}: expected {expected}, found {}", w.dimension).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
