// Explicit mixed resolving sets for theta graphs, checked against the
// distance table.

use std::error::Error;

use mixdim::families::{balanced_theta_generator, theta, unbalanced_theta_generator, ThetaSpec};
use mixdim::metric::is_mixed_generator;
use mixdim::DistanceTable;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (a, b, c) in [(2, 2, 2), (2, 3, 3), (3, 3, 4), (1, 2, 5), (2, 3, 6), (3, 4, 9)] {
        let t = theta(ThetaSpec::new(a, b, c)?)?;
        let set = if t.spec.is_balanced() {
            balanced_theta_generator(&t)?
        } else {
            unbalanced_theta_generator(&t)?
        };
        let dt = DistanceTable::new(&t.graph)?;
        let ok = is_mixed_generator(&dt, &set);
        println!("{:<14} generator {set:?} resolves: {ok}", t.spec);
        if !ok {
            return Err(format!("{} not resolved", t.spec).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
