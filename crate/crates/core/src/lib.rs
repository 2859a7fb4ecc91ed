//! Exact and above-guarantee solvers for Vertex Cover and Feedback Vertex
//! Set, the structural parameters they branch on, certified reduction
//! generators, and brute-force oracles for cross-checking all of them.

pub mod bitset;
pub mod cnf;
pub mod error;
pub mod fvs;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod params;
pub mod planar;
pub mod reductions;
pub mod solve;
pub mod vc;
pub mod verify;

pub use cnf::{CnfFormula, Literal};
pub use error::{Error, Result};
pub use graph::{Graph, InducedSubgraph, VertexSet};
