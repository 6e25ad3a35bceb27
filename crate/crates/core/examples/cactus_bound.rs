// A cactus built from a tree skeleton with cycles and pendant paths hung on
// it, compared against `L1 + 2c`.

use std::error::Error;

use mixdim::families::{cactus, cactus_cycles, every_cycle_has_one_branch_vertex, path, Attachment, CactusSpec};
use mixdim::invariants::{cyclomatic_number, leaf_count};
use mixdim::metric::{mixed_metric_dimension, SearchOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = CactusSpec {
        skeleton: path(3)?,
        cycles: vec![Attachment { anchor: 0, length: 4 }, Attachment { anchor: 2, length: 3 }],
        pendants: vec![Attachment { anchor: 1, length: 2 }],
    };
    let g = cactus(&spec)?;
    let w = mixed_metric_dimension(&g, SearchOptions::pruned())?;
    let bound = leaf_count(&g) + 2 * cyclomatic_number(&g);
    println!("n={} m={} cycles={:?}", g.n(), g.m(), cactus_cycles(&g));
    println!(
        "mdim={} bound={bound} one branch vertex per cycle: {}",
        w.dimension,
        every_cycle_has_one_branch_vertex(&g)
    );
    println!("witness {:?}", w.witness);
    if w.dimension > bound {
        return Err("bound violated".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
