//! Threshold-dimension decompositions of graphs.
//!
//! A graph is written as an intersection of threshold graphs by one of
//! several constructions (vertex cover, degeneracy, tree decomposition,
//! maximum degree, or exhaustive search on small inputs). Each
//! decomposition compiles into a depth-2 circuit of linear threshold gates
//! feeding one AND gate that computes the graph's clique indicator.

pub mod circuits;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod graph;
pub mod ltf;
pub mod maxdeg;
pub mod randlab;
pub mod report;
pub mod threshold;

pub use error::{Error, Result};
pub use graph::Graph;
