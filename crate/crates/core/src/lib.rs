//! Minimum-edge graphical embodiments of colour clusters, chromatic Zagreb
//! indices, and an audit harness for closed-form index formulas.

pub mod chromatic;
pub mod cli;
pub mod cluster;
pub mod embodiment;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod sequences;
pub mod sweep;
pub mod zagreb;

pub use error::{Error, Result};
