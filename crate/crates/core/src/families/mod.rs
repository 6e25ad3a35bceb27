//! Graph families: paths, cycles, stars, labeled trees, theta graphs, cacti.

mod basic;
mod cactus;
mod theta;

use thiserror::Error;

use crate::graph::GraphError;

pub use basic::{complete, cycle, labeled_trees, path, star, tree_from_pruefer};
pub use cactus::{
    blocks, cactus, cactus_cycles, every_cycle_has_one_branch_vertex, is_cactus, Attachment, Block, CactusSpec,
};
pub use theta::{
    antipodal_vertices, balanced_theta_generator, is_balanced, recognize_theta, theta, unbalanced_theta_generator,
    ThetaGraph, ThetaSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not balanced")]
    NotBalanced(ThetaSpec),
    #[error("{0} is balanced")]
    Balanced(ThetaSpec),
    #[error("cycles would share an edge")]
    NotEdgeDisjoint,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
