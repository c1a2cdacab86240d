//! Directed width measures of small digraphs: exact solvers, witness
//! structures, conversions between them, and an exhaustive property harness.

pub mod digraph;
pub mod error;
pub mod expressions;
pub mod families;
pub mod format;
pub mod gf;
pub mod harness;
pub mod layout;
pub mod pathdecomp;
pub mod set;
pub mod threshold;

pub use digraph::{Adjacency, DegreeProfile, Digraph, DigraphClass, UndirectedGraph};
pub use error::{Error, Result};
pub use layout::{Layout, MeasureKind, SolveResult, SolverConfig};
pub use set::VertexSet;
