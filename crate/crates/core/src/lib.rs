//! Even pairs and optimal colouring for graphs with no odd hole, no long
//! antihole and no prism.
//!
//! Vertex ids are 0-based in memory and 1-based in every external format
//! (DIMACS, JSON).

pub mod coloring;
pub mod evenpair;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracles;

pub use evenpair::{find_special_even_pair, EvenPairError, EvenPairResult, PairCase};
pub use generators::{named_instance, GenSpec};
pub use graph::{Graph, GraphError, Path, VertexId, VertexSet};
