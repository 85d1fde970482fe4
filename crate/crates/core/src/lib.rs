pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod homology;
pub mod parallel;
pub mod rational;
pub mod sections;
pub mod verify;

pub use error::{Error, Result};
