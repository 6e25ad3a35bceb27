//! Exact mixed metric dimension of small graphs, with constructors for theta
//! graphs and cacti, graph6/sparse6 I/O, and a verification harness for the
//! bound `mdim(G) <= L1(G) + 2c(G)`.

pub mod combinations;
pub mod distance;
pub mod families;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod metric;

pub use distance::DistanceTable;
pub use graph::{EdgeId, Graph, GraphError, MixedElement};
