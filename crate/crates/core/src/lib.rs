//! Odd hole detection in polynomial time, with verified witnesses, and a
//! perfect graph test built on top of it.
//!
//! The detection pipeline is [`fast::detect`]: pyramids and jewels are
//! searched first, then shortest odd holes that become clean after deleting
//! the neighbours of one edge, and finally the six-type search for graphs
//! that survive all of that.
pub mod bench;
pub mod clean;
pub mod config;
pub mod corpus;
pub mod fast;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod probes;
pub mod simple;

pub use fast::{detect, detect_fast};
pub use graph::{Graph, GraphError, HoleWitness, Path, Vertex, VertexMask};
pub use pipeline::{test_perfect, Algorithm};
pub use simple::DetectionResult;
