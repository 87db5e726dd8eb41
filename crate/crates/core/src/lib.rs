//! Milnor invariants, link polynomials and clasper constructions on link
//! diagrams.

pub mod catalog;
pub mod constructions;
pub mod diagram;
pub mod error;
pub mod harness;
pub mod magnus;
pub mod polynomials;
pub mod wirtinger;

pub use error::{Error, Result};
