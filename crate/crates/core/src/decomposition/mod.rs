//! Branch-depth and branch-width: decomposition trees, their widths, exact
//! solvers with witnesses, balanced separations and grafting.

mod depth;
mod graft;
mod separation;
mod tree;
mod width;

use serde::Serialize;

pub use depth::{
    branch_depth, branch_depth_at_least, decomposition_radius, decomposition_width,
    has_kr_decomposition, is_kr_decomposition, node_width,
};
pub use graft::{graft_decompositions, GraftResult, Piece};
pub use separation::find_balanced_separation;
pub use tree::{BranchDecomposition, Decomposition, Tree};
pub use width::{branch_width, branch_width_minor_monotone_check, graph_branch_width};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Depth(Decomposition),
    Branch(BranchDecomposition),
}

/// One bound tried by an exact solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRound {
    pub bound: usize,
    pub feasible: bool,
    /// Search states visited while deciding this bound.
    pub states: usize,
}

/// A value with a witness at that value and the record of the bounds that
/// were refuted below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthCertificate {
    pub value: usize,
    pub witness: Option<Witness>,
    pub lower_bound_trace: Vec<TraceRound>,
}

impl WidthCertificate {
    pub fn decomposition(&self) -> Option<&Decomposition> {
        match &self.witness {
            Some(Witness::Depth(d)) => Some(d),
            _ => None,
        }
    }

    pub fn branch_decomposition(&self) -> Option<&BranchDecomposition> {
        match &self.witness {
            Some(Witness::Branch(d)) => Some(d),
            _ => None,
        }
    }
}
