//! Exact confidence measures over finite universes, acceptance functions and
//! their conditioning.

pub mod acceptance;
pub mod cli;
pub mod conditioning;
pub mod error;
pub mod klm;
pub mod measures;
pub mod rational;
pub mod set_function;
pub mod universe;
pub mod witness;

pub use error::{Error, Result};
pub use rational::Rational;
pub use set_function::{SetFunction, SignedMass, ValidationReport, Violation};
pub use universe::{Event, Universe};
