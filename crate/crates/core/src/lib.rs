//! Structural algorithms for sparse directed graphs: shallow minors, weak
//! coloring orders, directed Steiner trees, distance-`r` domination and
//! domination kernels, plus brute-force reference oracles.

pub mod coloring;
pub mod degeneracy;
pub mod domination;
pub mod duality;
pub mod error;
pub mod graph;
pub mod instances;
pub mod io;
pub mod minors;
pub mod oracles;
pub mod order;
pub mod scc;
pub mod steiner;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Digraph;
pub use order::LinearOrder;
pub use vertex_set::VertexSet;
