//! Resolvability, enclosure and exact metric dimensions.

mod enclosure;
mod resolve;
mod search;

pub use enclosure::{enclosed, half_enclosed, on_common_geodesic, on_geodesic, on_path_to};
pub use resolve::{
    distinguishes, find_unresolved_pair, is_edge_generator, is_generator, is_mixed_generator, is_vertex_generator,
    Signature, Variant,
};
pub use search::{
    edge_metric_dimension, metric_dimension, mixed_metric_dimension, search, vertex_metric_dimension, GeneratorWitness,
    SearchError, SearchOptions,
};
