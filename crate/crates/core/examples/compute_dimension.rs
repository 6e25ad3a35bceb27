// Exact mixed, vertex and edge metric dimension of a few small graphs.

use std::error::Error;

use mixdim::families::{complete, cycle, path, star};
use mixdim::metric::{metric_dimension, SearchOptions, Variant};
use mixdim::Graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("P5", path(5)?),
        ("C6", cycle(6)?),
        ("K1,4", star(4)?),
        ("K4", complete(4)?),
    ];
    for (name, g) in &graphs {
        let mut line = format!("{name:<5}");
        for variant in [Variant::Mixed, Variant::VertexOnly, Variant::EdgeOnly] {
            let w = metric_dimension(g, variant, SearchOptions::default())?;
            line.push_str(&format!("  {}={} {:?}", variant.name(), w.dimension, w.witness));
        }
        println!("{line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
