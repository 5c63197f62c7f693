pub mod algebra;
pub mod colouring;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod invariants;

pub use error::{KnotError, Result};
