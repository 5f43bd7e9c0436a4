//! Lovász theta numbers of Cayley graphs.

pub mod apps;
pub mod characters;
pub mod error;
pub mod graphs;
pub mod groups;
pub mod linalg;
pub mod registry;
pub mod scalar;
pub mod simplex;
pub mod theta;

pub use error::{Error, Result};
