//! Matroid connectivity toolkit: rank oracles over several backends, exact
//! branch-width and branch-depth with witness trees, twisted matroids and
//! their fundamental graphs, lollipop constructions that grow fan minors,
//! and quasi-graphic matroids.

pub mod catalog;
pub mod decomposition;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod limits;
pub mod lollipop;
pub mod matroid;
pub mod quasigraphic;
pub mod subset;
pub mod twisted;
pub mod verify;

pub use error::{Error, Result};
pub use graph::MultiGraph;
pub use limits::Limits;
pub use matroid::Matroid;
pub use subset::{GroundSet, Subset};
