//! Independence, matching and critical-set invariants of small simple graphs.

pub mod critical;
pub mod cycles;
pub mod decomposition;
pub mod ear;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod matching;
pub mod oracle;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Induced};
pub use vertex_set::VertexSet;
