//! Path transformations, Robinson–Schensted insertion and the Markov chains,
//! symmetric functions and tandem queues around them.
//!
//! The crate is `no_std` and needs only `alloc`. Combinatorial quantities are
//! exact (big integers and rationals); floating point appears only in the
//! transcendental queueing formulas and in Monte Carlo estimates.

#![no_std]

extern crate alloc;

pub mod continuous;
pub mod error;
pub mod lattice;
pub mod markov;
pub mod queueing;
pub mod symfunc;
pub mod tableaux;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
