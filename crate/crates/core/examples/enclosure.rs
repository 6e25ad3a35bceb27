// Geodesic enclosure: an element lying on a shortest path between two
// landmarks that also passes through another element.

use std::error::Error;

use mixdim::families::{theta, ThetaSpec};
use mixdim::metric::{distinguishes, enclosed, half_enclosed};
use mixdim::{DistanceTable, MixedElement};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = theta(ThetaSpec::new(2, 2, 3)?)?;
    let dt = DistanceTable::new(&t.graph)?;
    let set = [t.u, t.v];
    let mut pairs = 0;
    let mut enclosed_pairs = 0;
    let elements: Vec<MixedElement> = t.graph.elements().collect();
    for (i, &x) in elements.iter().enumerate() {
        for &y in &elements[i + 1..] {
            let resolved = set.iter().any(|&s| distinguishes(&dt, s, x, y));
            if !resolved {
                pairs += 1;
                if enclosed(&dt, &set, x, y) || half_enclosed(&dt, &set, x, y) {
                    enclosed_pairs += 1;
                }
            }
        }
    }
    println!(
        "{}: {pairs} pairs unresolved by {{u, v}}, {enclosed_pairs} of them enclosed",
        t.spec
    );
    let x = MixedElement::Vertex(t.internal(0)[0]);
    let y = MixedElement::Vertex(t.internal(1)[0]);
    println!("{x:?} vs {y:?}: enclosed={}", enclosed(&dt, &set, x, y));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
