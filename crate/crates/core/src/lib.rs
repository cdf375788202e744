//! Graphs and digraphs with essential connectivity: construction, exact
//! spectral analysis of the extremal families, and exhaustive verification
//! of the extremal spectral radius bounds at small orders.

pub mod canon;
pub mod connectivity;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod io;
pub mod poly;
pub mod quotient;
pub mod spectral;
pub mod verifier;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{Digraph, Graph};
