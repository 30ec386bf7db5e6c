pub mod adjoints;
pub mod chromatic;
pub mod duality;
pub mod error;
pub mod graph;
pub mod hom;
pub mod limits;
pub mod pultr;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph};
pub use limits::Limits;
