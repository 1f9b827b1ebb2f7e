//! Exact computation of the total, 2- and double outer-independent domination
//! numbers of small graphs, together with generators and recognizers for their
//! extremal families, NP-hardness gadgets, and an exhaustive verifier for the
//! known bounds.

pub mod graph;

pub use graph::{Graph, GraphError, VertexSet};
pub use solvers::{ParamKind, ParamResult};
pub mod families;
pub mod reductions;
pub mod solvers;
pub mod verifier;
