//! Edge-colored graph connectivity.
//!
//! Verifiers for monochromatic, proper and conflict-free connectivity, exact
//! small-instance oracles, SAT gadget reductions with certificate colorings,
//! and a linear-time computation of `cc_k` for trees.

pub mod error;
pub mod graph;
pub mod oracles;
pub mod reductions;
pub mod tree_cck;
pub mod verifiers;

pub use error::{Error, Result};
pub use graph::{build_graph, color_classes, waste, Color, EdgeColoring, EdgeId, Graph, VertexId};
