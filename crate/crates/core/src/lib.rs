//! Triangulations and edge-flip graphs of polygons and point sets on the
//! five locally Euclidean surfaces (plane, cylinder, twisted cylinder,
//! torus, Klein bottle), with exact rational arithmetic throughout.

pub mod cli;
pub mod edges;
pub mod error;
pub mod fixtures;
pub mod flips;
pub mod io;
pub mod kernel;
pub mod pointset;
pub mod polygon;
pub mod render;

pub use edges::{Edge, EdgeSet};
pub use error::{Error, Result};
