// Reading and writing graph6, sparse6 and edge lists.

use std::error::Error;

use mixdim::io::{encode_graph6, encode_sparse6, parse_document, parse_graph6, parse_sparse6, write_edge_list};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k4 = parse_graph6(b"C~")?;
    println!("C~ -> n={} m={}", k4.n(), k4.m());
    let s6 = encode_sparse6(&k4);
    println!("sparse6 {s6}, graph6 {}", encode_graph6(&k4));
    assert_eq!(parse_sparse6(s6.as_bytes())?.edges(), k4.edges());
    print!("{}", write_edge_list(&k4));

    let doc = "C~\nCh\nbroken!\n:Fa@x^\n";
    for record in parse_document(doc) {
        match record {
            Ok(r) => println!("line {}: {:?} n={} m={}", r.line, r.format, r.graph.n(), r.graph.m()),
            Err((line, e)) => println!("line {line}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
